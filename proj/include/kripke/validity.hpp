// Bounded validity and equivalence for classical, intuitionistic and
// Goedel-Dummett propositional logic, plus the pigeonhole family and its
// fan-shaped counter-models.

#ifndef KRIPKE_VALIDITY_HPP
#define KRIPKE_VALIDITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kripke/formula.hpp"
#include "kripke/model.hpp"

namespace kripke {

/// Frame classes: CPL one-world frames, IPL all frames, GDL connected frames.
enum class Logic { cpl, ipl, gdl };

Logic parse_logic(std::string_view name);
std::string_view logic_name(Logic logic);
bool admits_frame(Logic logic, const Frame& frame);

class ResourceError : public Error {
 public:
  ResourceError(std::uint64_t size, std::uint64_t ceiling);
  std::uint64_t size() const { return size_; }

 private:
  std::uint64_t size_;
};

struct SearchOptions {
  /// Largest number of (frame, assignment) pairs the search may plan for.
  std::uint64_t ceiling = 1'000'000'000;
  unsigned threads = 1;
};

struct Counterexample {
  Model model;
  std::size_t frame_index = 0;
  /// Mixed-radix index of the atom assignment: atoms in sorted order, the
  /// first most significant, digits indexing all_upsets of the frame.
  std::uint64_t assignment = 0;
  std::size_t world = 0;
};

struct ValidityVerdict {
  std::size_t bound = 0;
  std::optional<Counterexample> counterexample;
  /// For equivalence checks: the implication that fails at the world.
  std::optional<Formula> failing_direction;

  bool valid() const { return !counterexample.has_value(); }
};

/// Catalog indices of the frames with at most `max_worlds` worlds that
/// belong to the logic's frame class.
std::vector<std::size_t> frame_class(Logic logic, std::size_t max_worlds);

/// Searches catalog frames of at most `max_worlds` worlds in the logic's
/// class, every upset assignment to the atoms of `f`, every world, and
/// returns the first failure in (frame index, assignment, world) order.
/// A Valid verdict only covers the bound. The planned work is checked
/// against the ceiling before each world count is entered; exceeding it
/// throws ResourceError.
ValidityVerdict check_validity(const Formula& f, Logic logic, std::size_t max_worlds,
                               const SearchOptions& options = {});

/// Validity of (f -> g) & (g -> f); a counterexample names the failing half.
ValidityVerdict check_equivalence(const Formula& f, const Formula& g, Logic logic,
                                  std::size_t max_worlds, const SearchOptions& options = {});

/// Disjunction of p_i -> p_j over 0 <= i < j <= n, pairs in lexicographic
/// order, nested to the right.
Formula pigeonhole_formula(std::size_t n);

struct GodelFan {
  Model model;
  Formula formula;
  std::size_t root = 0;
};

/// Root k below leaves k0..k{n-1}; leaf ki forces exactly pi, and p{n}
/// holds nowhere. The root fails pigeonhole_formula(n). Requires n >= 2.
GodelFan godel_fan(std::size_t n);

}  // namespace kripke

#endif  // KRIPKE_VALIDITY_HPP
