// Translations between valuations into the value space and Kripke models
// on catalog frames, and executable checks of their agreement.

#ifndef KRIPKE_CORRESPONDENCE_HPP
#define KRIPKE_CORRESPONDENCE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "kripke/formula.hpp"
#include "kripke/many_valued.hpp"
#include "kripke/model.hpp"

namespace kripke {

/// Model on catalog frame n in which each atom of `atom_set` holds exactly
/// on component n of its value. Throws ValuationError for a missing atom.
Model induced_model(const Valuation& v, std::size_t n, const std::set<std::string>& atom_set);

/// Each atom maps to the sequence that is 1_K everywhere except on frame
/// `m_index`, where it is the atom's truth set in `m`. Throws ModelError if
/// the frame of `m` is not ordered like catalog frame `m_index`.
Valuation induced_valuation(const Model& m, std::size_t m_index, const std::set<std::string>& atom_set);

using ValuationEvaluator = std::function<ValueSeq(const Valuation&, const Formula&)>;

struct CorrespondenceOptions {
  std::size_t depth = 3;
  std::size_t frames = 5;
  std::size_t trials = 200;
  std::uint64_t seed = 7;
  /// The many-valued side under test; tests swap in a corrupted one.
  ValuationEvaluator evaluator = extend_valuation;
};

struct CorrespondenceViolation {
  /// 1: forcing in the induced model vs component n of the value.
  /// 2: non-forcing in a model vs component m of the induced valuation.
  int direction = 0;
  std::size_t frame_index = 0;
  std::size_t world = 0;
  Formula formula = Formula::top();
  bool kripke_side = false;
  bool value_side = false;
};

struct CorrespondenceReport {
  std::size_t trials = 0;
  std::size_t direct_checks = 0;
  std::size_t direct_violations = 0;
  std::size_t converse_checks = 0;
  std::size_t converse_violations = 0;
  /// Smallest violating formula, when there is any violation.
  std::optional<CorrespondenceViolation> witness;

  bool ok() const { return direct_violations == 0 && converse_violations == 0; }
};

/// Randomized run of both directions over catalog frames 0..frames-1 with
/// atoms p, q, r. Trial t draws from its own generator seeded by (seed, t).
CorrespondenceReport check_correspondence(const CorrespondenceOptions& options);
std::string render_correspondence_report(const CorrespondenceOptions& options, const CorrespondenceReport& report);

struct DesignationAgreement {
  /// Forced at every world of catalog frames 0..frames-1 under every upset
  /// assignment.
  bool kripke_valid = true;
  /// Designated under the induced valuation of every such model.
  bool all_designated = true;
  std::size_t models_checked = 0;
};

DesignationAgreement check_designation_agreement(const Formula& f, std::size_t frames);

}  // namespace kripke

#endif  // KRIPKE_CORRESPONDENCE_HPP
