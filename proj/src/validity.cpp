#include "kripke/validity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "kripke/catalog.hpp"
#include "kripke/many_valued.hpp"

namespace kripke {

Logic parse_logic(std::string_view name) {
  if (name == "cpl") return Logic::cpl;
  if (name == "ipl") return Logic::ipl;
  if (name == "gdl") return Logic::gdl;
  throw Error("unknown logic '" + std::string(name) + "' (expected cpl, ipl or gdl)");
}

std::string_view logic_name(Logic logic) {
  switch (logic) {
    case Logic::cpl: return "cpl";
    case Logic::ipl: return "ipl";
    case Logic::gdl: return "gdl";
  }
  return "?";
}

bool admits_frame(Logic logic, const Frame& frame) {
  switch (logic) {
    case Logic::cpl: return frame.size() == 1;
    case Logic::ipl: return true;
    case Logic::gdl: return is_connected(frame);
  }
  return false;
}

ResourceError::ResourceError(std::uint64_t size, std::uint64_t ceiling)
    : Error("search space of at least " + std::to_string(size) +
            " frame/assignment pairs exceeds the ceiling of " + std::to_string(ceiling)),
      size_(size) {}

std::vector<std::size_t> frame_class(Logic logic, std::size_t max_worlds) {
  std::vector<std::size_t> out;
  const std::size_t top = logic == Logic::cpl ? 1 : std::min(max_worlds, kMaxCatalogWorlds);
  for (std::size_t n = 1; n <= top; ++n) {
    const std::size_t begin = catalog().layer_begin(n);
    const auto& keys = catalog().layer(n);
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (admits_frame(logic, frame_from_key(n, keys[i]))) out.push_back(begin + i);
  }
  return out;
}

namespace {

/// Formula flattened into slots in evaluation order, for fast repeated
/// evaluation on world masks.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& atom_names) {
    compile(f, atom_names);
  }

  WorldMask evaluate(const Frame& frame, const std::vector<WorldMask>& atom_values,
                     std::vector<WorldMask>& scratch) const {
    scratch.resize(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const Step& s = steps_[i];
      switch (s.kind) {
        case Formula::Kind::top: scratch[i] = frame.all(); break;
        case Formula::Kind::atom: scratch[i] = atom_values[s.a]; break;
        case Formula::Kind::neg: scratch[i] = frame_op(Connective::neg, frame, scratch[s.a]); break;
        case Formula::Kind::conj: scratch[i] = scratch[s.a] & scratch[s.b]; break;
        case Formula::Kind::disj: scratch[i] = scratch[s.a] | scratch[s.b]; break;
        case Formula::Kind::imp:
          scratch[i] = frame_op(Connective::imp, frame, scratch[s.a], scratch[s.b]);
          break;
      }
    }
    return scratch.back();
  }

 private:
  struct Step {
    Formula::Kind kind;
    std::size_t a = 0;
    std::size_t b = 0;
  };

  std::size_t compile(const Formula& f, const std::vector<std::string>& atom_names) {
    Step step{f.kind()};
    switch (f.kind()) {
      case Formula::Kind::top: break;
      case Formula::Kind::atom:
        step.a = static_cast<std::size_t>(
            std::find(atom_names.begin(), atom_names.end(), f.name()) - atom_names.begin());
        break;
      case Formula::Kind::neg: step.a = compile(f.lhs(), atom_names); break;
      default:
        step.a = compile(f.lhs(), atom_names);
        step.b = compile(f.rhs(), atom_names);
    }
    steps_.push_back(step);
    return steps_.size() - 1;
  }

  std::vector<Step> steps_;
};

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

struct Hit {
  std::uint64_t assignment;
  std::size_t world;
  std::vector<WorldMask> atom_values;
};

/// First failing assignment on one frame, if any.
std::optional<Hit> search_frame(const Frame& frame, const CompiledFormula& program,
                                std::size_t atom_count) {
  const auto choices = all_upsets(frame);
  const std::size_t base = choices.size();
  std::vector<std::size_t> digit(atom_count, 0);
  std::vector<WorldMask> values(atom_count, choices[0]);
  std::vector<WorldMask> scratch;
  for (std::uint64_t index = 0;; ++index) {
    const WorldMask truth = program.evaluate(frame, values, scratch);
    if (truth != frame.all())
      return Hit{index, static_cast<std::size_t>(std::countr_zero(frame.all() & ~truth)), values};
    std::size_t pos = atom_count;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < base) {
        values[pos] = choices[digit[pos]];
        break;
      }
      digit[pos] = 0;
      values[pos] = choices[0];
      if (pos == 0) return std::nullopt;
    }
    if (atom_count == 0) return std::nullopt;
  }
}

}  // namespace

ValidityVerdict check_validity(const Formula& f, Logic logic, std::size_t max_worlds,
                               const SearchOptions& options) {
  if (max_worlds == 0) throw Error("max_worlds must be at least 1");
  if (max_worlds > kMaxCatalogWorlds)
    throw Error("max_worlds is limited to " + std::to_string(kMaxCatalogWorlds));
  const std::set<std::string> atom_set = atoms(f);
  const std::vector<std::string> atom_names(atom_set.begin(), atom_set.end());
  const CompiledFormula program(f, atom_names);

  ValidityVerdict verdict;
  verdict.bound = max_worlds;
  std::uint64_t planned = 0;
  const std::size_t top = logic == Logic::cpl ? 1 : max_worlds;

  for (std::size_t n = 1; n <= top; ++n) {
    // Reaching this layer means every smaller frame of the class is a model
    // of f. A world whose up-set is not the whole frame sees only a smaller
    // generated subframe, isomorphic to one already searched (and still in
    // the class, which is closed under generated subframes), so only frames
    // rooted at world 0 can fail.
    const std::size_t begin = catalog().layer_begin(n);
    const auto& keys = catalog().layer(n);
    std::vector<std::size_t> candidates;
    std::uint64_t layer_space = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const Frame frame = frame_from_key(n, keys[i]);
      if (!admits_frame(logic, frame) || frame.up(0) != frame.all()) continue;
      candidates.push_back(begin + i);
      layer_space = saturating_add(layer_space, saturating_pow(all_upsets(frame).size(), atom_names.size()));
    }
    planned = saturating_add(planned, layer_space);
    if (planned > options.ceiling) throw ResourceError(planned, options.ceiling);

    std::vector<std::optional<Hit>> hits(candidates.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{candidates.size()};
    auto worker = [&] {
      for (std::size_t c = next++; c < candidates.size(); c = next++) {
        if (c > first_hit.load()) continue;
        const Frame frame = catalog().frame_at(candidates[c]);
        hits[c] = search_frame(frame, program, atom_names.size());
        if (hits[c]) {
          std::size_t seen = first_hit.load();
          while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
          }
        }
      }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, candidates.size()));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    const std::size_t c = first_hit.load();
    if (c == candidates.size()) continue;
    const Hit& hit = *hits[c];
    std::map<std::string, WorldMask> val;
    for (std::size_t a = 0; a < atom_names.size(); ++a) val[atom_names[a]] = hit.atom_values[a];
    Counterexample ce{Model(catalog().frame_at(candidates[c]), std::move(val)), candidates[c],
                      hit.assignment, hit.world};
    if (forces(ce.model, ce.world, f))
      throw std::logic_error("validity search produced a counterexample that does not re-verify");
    verdict.counterexample = std::move(ce);
    return verdict;
  }
  return verdict;
}

ValidityVerdict check_equivalence(const Formula& f, const Formula& g, Logic logic,
                                  std::size_t max_worlds, const SearchOptions& options) {
  const Formula forward = Formula::imp(f, g);
  const Formula backward = Formula::imp(g, f);
  ValidityVerdict verdict = check_validity(Formula::conj(forward, backward), logic, max_worlds, options);
  if (verdict.counterexample) {
    const auto& ce = *verdict.counterexample;
    verdict.failing_direction = forces(ce.model, ce.world, forward) ? backward : forward;
  }
  return verdict;
}

Formula pigeonhole_formula(std::size_t n) {
  if (n < 1) throw Error("pigeonhole_formula needs n >= 1");
  std::vector<Formula> disjuncts;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      disjuncts.push_back(Formula::imp(Formula::atom("p" + std::to_string(i)),
                                       Formula::atom("p" + std::to_string(j))));
  Formula out = disjuncts.back();
  for (std::size_t k = disjuncts.size() - 1; k-- > 0;) out = Formula::disj(disjuncts[k], out);
  return out;
}

GodelFan godel_fan(std::size_t n) {
  if (n < 2) throw Error("godel_fan needs n >= 2");
  if (n + 1 > kMaxWorlds) throw Error("godel_fan: too many leaves for a 64-world frame");
  std::vector<std::string> worlds{"k"};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::string, WorldMask> val;
  for (std::size_t i = 0; i < n; ++i) {
    worlds.push_back("k" + std::to_string(i));
    pairs.emplace_back(0, i + 1);
    val["p" + std::to_string(i)] = world_bit(i + 1);
  }
  val["p" + std::to_string(n)] = 0;
  return GodelFan{Model(Frame::from_pairs(std::move(worlds), pairs), std::move(val)),
                  pigeonhole_formula(n), 0};
}

}  // namespace kripke
