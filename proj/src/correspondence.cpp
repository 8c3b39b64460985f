#include "kripke/correspondence.hpp"

#include <random>
#include <sstream>
#include <tuple>
#include <vector>

#include "kripke/catalog.hpp"

namespace kripke {

Model induced_model(const Valuation& v, std::size_t n, const std::set<std::string>& atom_set) {
  Frame frame = frame_at(n);
  std::map<std::string, WorldMask> val;
  for (const auto& atom : atom_set) {
    auto it = v.find(atom);
    if (it == v.end()) throw ValuationError("valuation has no value for atom '" + atom + "'");
    val[atom] = it->second.component(n).bits();
  }
  return Model(std::move(frame), std::move(val));
}

Valuation induced_valuation(const Model& m, std::size_t m_index, const std::set<std::string>& atom_set) {
  if (!m.frame().same_order(frame_at(m_index)))
    throw ModelError("model frame is not ordered like catalog frame " + std::to_string(m_index));
  Valuation out;
  for (const auto& atom : atom_set) {
    std::vector<Upset> prefix;
    for (std::size_t i = 0; i < m_index; ++i) prefix.push_back(Upset::full(frame_at(i)));
    prefix.push_back(m.atom_set(atom));
    out.emplace(atom, ValueSeq::make(std::move(prefix), Tail::ones));
  }
  return out;
}

namespace {

const std::vector<std::string> kTrialAtoms = {"p", "q", "r"};

Upset random_upset(std::mt19937_64& rng, const Frame& frame) {
  const auto choices = all_upsets(frame);
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  return Upset::from_verified(choices[pick(rng)]);
}

ValueSeq random_value(std::mt19937_64& rng, std::size_t frames) {
  std::uniform_int_distribution<std::size_t> length(0, frames);
  std::bernoulli_distribution ones(0.5);
  const Tail tail = ones(rng) ? Tail::ones : Tail::zeros;
  std::vector<Upset> prefix;
  const std::size_t len = length(rng);
  for (std::size_t i = 0; i < len; ++i) prefix.push_back(random_upset(rng, frame_at(i)));
  return ValueSeq::make(std::move(prefix), tail);
}

bool smaller_witness(const CorrespondenceViolation& a, const CorrespondenceViolation& b) {
  return std::make_tuple(a.formula.size(), render(a.formula), a.direction, a.frame_index, a.world) <
         std::make_tuple(b.formula.size(), render(b.formula), b.direction, b.frame_index, b.world);
}

}  // namespace

CorrespondenceReport check_correspondence(const CorrespondenceOptions& options) {
  if (options.frames == 0) throw Error("check_correspondence needs at least one catalog frame");
  const std::set<std::string> atom_set(kTrialAtoms.begin(), kTrialAtoms.end());
  CorrespondenceReport report;

  auto record = [&](CorrespondenceViolation v) {
    if (!report.witness || smaller_witness(v, *report.witness)) report.witness = std::move(v);
  };

  for (std::size_t t = 0; t < options.trials; ++t) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> frame_pick(0, options.frames - 1);
    ++report.trials;

    // Direct: a valuation induces a model on frame n.
    {
      Valuation v;
      for (const auto& atom : kTrialAtoms) v.emplace(atom, random_value(rng, options.frames));
      const std::size_t n = frame_pick(rng);
      const Formula phi = random_formula(rng, kTrialAtoms, options.depth);
      const Model model = induced_model(v, n, atom_set);
      const Upset value = options.evaluator(v, phi).component(n);
      for (std::size_t k = 0; k < model.frame().size(); ++k) {
        ++report.direct_checks;
        const bool kripke_side = forces(model, k, phi);
        const bool value_side = value.contains(k);
        if (kripke_side != value_side) {
          ++report.direct_violations;
          record({1, n, k, phi, kripke_side, value_side});
        }
      }
    }

    // Converse: a model on frame m induces a valuation.
    {
      const std::size_t m = frame_pick(rng);
      Frame frame = frame_at(m);
      std::map<std::string, WorldMask> val;
      for (const auto& atom : kTrialAtoms) val[atom] = random_upset(rng, frame).bits();
      const Model model(frame, std::move(val));
      const Formula phi = random_formula(rng, kTrialAtoms, options.depth);
      const Valuation nu = induced_valuation(model, m, atom_set);
      const Upset value = options.evaluator(nu, phi).component(m);
      for (std::size_t k = 0; k < frame.size(); ++k) {
        ++report.converse_checks;
        const bool kripke_side = forces(model, k, phi);
        const bool value_side = value.contains(k);
        // not forced <=> component value 0
        if (!kripke_side != !value_side) {
          ++report.converse_violations;
          record({2, m, k, phi, kripke_side, value_side});
        }
      }
    }
  }
  return report;
}

std::string render_correspondence_report(const CorrespondenceOptions& options, const CorrespondenceReport& report) {
  std::ostringstream out;
  out << "correspondence: depth=" << options.depth << " frames=" << options.frames
      << " trials=" << options.trials << " seed=" << options.seed << '\n';
  out << "direct: " << report.direct_checks << " checks, " << report.direct_violations
      << " violations\n";
  out << "converse: " << report.converse_checks << " checks, " << report.converse_violations
      << " violations\n";
  if (report.witness) {
    const auto& w = *report.witness;
    out << "witness: direction=" << w.direction << " frame=" << w.frame_index
        << " world=" << w.world << " formula=\"" << render(w.formula) << "\" forced="
        << (w.kripke_side ? "yes" : "no") << " component=" << (w.value_side ? 1 : 0) << '\n';
  }
  out << "result: " << (report.ok() ? "OK" : "VIOLATED") << '\n';
  return out.str();
}

DesignationAgreement check_designation_agreement(const Formula& f, std::size_t frames) {
  const std::set<std::string> atom_set = atoms(f);
  const std::vector<std::string> names(atom_set.begin(), atom_set.end());
  DesignationAgreement result;
  for (std::size_t m = 0; m < frames; ++m) {
    const Frame frame = frame_at(m);
    const auto choices = all_upsets(frame);
    std::vector<std::size_t> digit(names.size(), 0);
    while (true) {
      std::map<std::string, WorldMask> val;
      for (std::size_t a = 0; a < names.size(); ++a) val[names[a]] = choices[digit[a]];
      const Model model(frame, std::move(val));
      ++result.models_checked;
      if (truth_set(model, f).bits() != frame.all()) result.kripke_valid = false;
      if (!is_designated(extend_valuation(induced_valuation(model, m, atom_set), f)))
        result.all_designated = false;

      std::size_t pos = names.size();
      while (pos > 0 && ++digit[pos - 1] == choices.size()) digit[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return result;
}

}  // namespace kripke
