// Connective definability over a fixed finite model.
//
// The truth sets of all formulas built from the generators with a set of
// connectives form the least family of upsets that contains the generators
// and is closed under the matching frame operations. Computing that family
// as a fixpoint decides definability on the model exactly: a target outside
// the closure is not definable in any logic whose frame class contains the
// model's frame.

#ifndef KRIPKE_CLONE_HPP
#define KRIPKE_CLONE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kripke/formula.hpp"
#include "kripke/model.hpp"

namespace kripke {

struct Generator {
  Formula formula;  // an atom or T
  Upset set;
};

struct CloneProblem {
  Model model;
  std::vector<Generator> generators;
  /// Operations among neg, conj, disj, imp. Connective::top is ignored here;
  /// T enters only as a generator.
  std::set<Connective> connectives;
  Upset target;
};

/// One generator per name; "T" is the full set, anything else an atom's
/// truth set in the model.
std::vector<Generator> make_generators(const Model& model, const std::vector<std::string>& names);

/// Default generators are T and every atom of the model's valuation.
CloneProblem make_clone_problem(const Model& model, const std::set<Connective>& connectives,
                                const Formula& target,
                                std::optional<std::vector<std::string>> generator_names = std::nullopt);

/// The fragment the witnesses live in: the problem's connectives, T if it
/// is a generator, and the generator atoms.
Fragment problem_fragment(const CloneProblem& p);

struct ClosureMember {
  Upset set;
  /// Fewest connectives among the candidates built from earlier witnesses;
  /// ties go to the smallest rendering.
  Formula witness;
};

/// Members sorted by (witness size, witness rendering).
std::vector<ClosureMember> clone_closure(const CloneProblem& p);

struct CloneCertificate {
  bool definable = false;
  std::optional<Formula> witness;
  std::vector<ClosureMember> closure;
};

CloneCertificate check_definable(const CloneProblem& p);

/// Re-checks a certificate independently of how it was produced: a witness
/// must lie in the fragment and have the target as truth set (by forcing);
/// a refutation's closure must hold the generators, be closed under every
/// operation, and miss the target.
bool verify_certificate(const CloneProblem& p, const CloneCertificate& cert);

/// True iff every closure member containing `premise` contains at least one
/// of the `clauses`.
bool check_separation(const CloneProblem& p, WorldMask premise, const std::vector<WorldMask>& clauses);

}  // namespace kripke

#endif  // KRIPKE_CLONE_HPP
