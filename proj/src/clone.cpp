#include "kripke/clone.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "kripke/many_valued.hpp"

namespace kripke {

std::vector<Generator> make_generators(const Model& model, const std::vector<std::string>& names) {
  std::vector<Generator> out;
  for (const auto& name : names) {
    if (name == "T") {
      out.push_back({Formula::top(), Upset::full(model.frame())});
    } else {
      out.push_back({Formula::atom(name), model.atom_set(name)});
    }
  }
  return out;
}

CloneProblem make_clone_problem(const Model& model, const std::set<Connective>& connectives,
                                const Formula& target,
                                std::optional<std::vector<std::string>> generator_names) {
  std::vector<std::string> names;
  if (generator_names) {
    names = std::move(*generator_names);
  } else {
    names.push_back("T");
    for (const auto& [atom, set] : model.valuation()) names.push_back(atom);
  }
  std::set<Connective> ops;
  for (Connective c : connectives)
    if (c != Connective::top) ops.insert(c);
  return CloneProblem{model, make_generators(model, names), std::move(ops), truth_set(model, target)};
}

Fragment problem_fragment(const CloneProblem& p) {
  Fragment frag;
  frag.connectives = p.connectives;
  for (const auto& g : p.generators) {
    if (g.formula.kind() == Formula::Kind::top) {
      frag.connectives.insert(Connective::top);
    } else {
      frag.atoms.insert(g.formula.name());
    }
  }
  return frag;
}

namespace {

constexpr Connective kBinaryOps[] = {Connective::conj, Connective::disj, Connective::imp};

Formula::Kind kind_of(Connective c) {
  switch (c) {
    case Connective::conj: return Formula::Kind::conj;
    case Connective::disj: return Formula::Kind::disj;
    default: return Formula::Kind::imp;
  }
}

/// Plain saturation: the closure as a set of masks.
std::unordered_set<WorldMask> saturate(const CloneProblem& p) {
  const Frame& frame = p.model.frame();
  std::unordered_set<WorldMask> seen;
  std::vector<WorldMask> members;
  auto add = [&](WorldMask m) {
    if (seen.insert(m).second) members.push_back(m);
  };
  for (const auto& g : p.generators) add(g.set.bits());
  // members[0..done) have been combined with each other already.
  for (std::size_t done = 0; done < members.size(); ++done) {
    const WorldMask x = members[done];
    if (p.connectives.count(Connective::neg)) add(frame_op(Connective::neg, frame, x));
    for (Connective op : kBinaryOps) {
      if (!p.connectives.count(op)) continue;
      for (std::size_t j = 0; j <= done; ++j) {
        const WorldMask y = members[j];
        add(frame_op(op, frame, x, y));
        add(frame_op(op, frame, y, x));
      }
    }
  }
  return seen;
}

struct Entry {
  WorldMask set;
  Formula witness;
  std::string text;
};

}  // namespace

std::vector<ClosureMember> clone_closure(const CloneProblem& p) {
  const Frame& frame = p.model.frame();
  const std::unordered_set<WorldMask> closure = saturate(p);

  // Breadth-first by connective count; levels[s] holds the sets whose
  // cheapest witness uses s connectives.
  std::vector<std::vector<Entry>> levels;
  std::unordered_set<WorldMask> found;

  auto finish_level = [&](std::map<WorldMask, Entry>& fresh) {
    std::vector<Entry> level;
    for (auto& [mask, entry] : fresh) {
      found.insert(mask);
      level.push_back(std::move(entry));
    }
    std::sort(level.begin(), level.end(), [](const Entry& a, const Entry& b) { return a.text < b.text; });
    levels.push_back(std::move(level));
  };
  auto offer = [&](std::map<WorldMask, Entry>& fresh, WorldMask mask, const Formula& witness) {
    if (found.count(mask)) return;
    std::string text = render(witness);
    auto it = fresh.find(mask);
    if (it == fresh.end()) {
      fresh.emplace(mask, Entry{mask, witness, std::move(text)});
    } else if (text < it->second.text) {
      it->second = Entry{mask, witness, std::move(text)};
    }
  };

  {
    std::map<WorldMask, Entry> fresh;
    for (const auto& g : p.generators) offer(fresh, g.set.bits(), g.formula);
    finish_level(fresh);
  }
  while (found.size() < closure.size()) {
    const std::size_t s = levels.size();
    std::map<WorldMask, Entry> fresh;
    if (p.connectives.count(Connective::neg))
      for (const auto& e : levels[s - 1])
        offer(fresh, frame_op(Connective::neg, frame, e.set), Formula::neg(e.witness));
    for (Connective op : kBinaryOps) {
      if (!p.connectives.count(op)) continue;
      for (std::size_t a = 0; a < s; ++a) {
        for (const auto& l : levels[a]) {
          for (const auto& r : levels[s - 1 - a]) {
            offer(fresh, frame_op(op, frame, l.set, r.set),
                  Formula::binary(kind_of(op), l.witness, r.witness));
          }
        }
      }
    }
    finish_level(fresh);
  }

  std::vector<ClosureMember> out;
  for (auto& level : levels)
    for (auto& e : level) out.push_back({Upset::from_verified(e.set), std::move(e.witness)});
  return out;
}

CloneCertificate check_definable(const CloneProblem& p) {
  CloneCertificate cert;
  cert.closure = clone_closure(p);
  for (const auto& member : cert.closure) {
    if (member.set == p.target) {
      cert.definable = true;
      cert.witness = member.witness;
      break;
    }
  }
  return cert;
}

bool verify_certificate(const CloneProblem& p, const CloneCertificate& cert) {
  const Frame& frame = p.model.frame();
  if (cert.definable) {
    return cert.witness && in_fragment(*cert.witness, problem_fragment(p)) &&
           truth_set(p.model, *cert.witness) == p.target;
  }
  std::unordered_set<WorldMask> sets;
  for (const auto& m : cert.closure) {
    if (!frame.is_upset(m.set.bits())) return false;
    sets.insert(m.set.bits());
  }
  if (sets.count(p.target.bits())) return false;
  for (const auto& g : p.generators)
    if (!sets.count(g.set.bits())) return false;
  for (WorldMask x : sets) {
    if (p.connectives.count(Connective::neg) && !sets.count(frame_op(Connective::neg, frame, x)))
      return false;
    for (Connective op : kBinaryOps) {
      if (!p.connectives.count(op)) continue;
      for (WorldMask y : sets)
        if (!sets.count(frame_op(op, frame, x, y))) return false;
    }
  }
  return true;
}

bool check_separation(const CloneProblem& p, WorldMask premise, const std::vector<WorldMask>& clauses) {
  for (const auto& member : clone_closure(p)) {
    const WorldMask u = member.set.bits();
    if ((premise & ~u) != 0) continue;
    const bool some_clause = std::any_of(clauses.begin(), clauses.end(),
                                         [u](WorldMask c) { return (c & ~u) == 0; });
    if (!some_clause) return false;
  }
  return true;
}

}  // namespace kripke
