// Propositional formulas over {~, &, |, ->, T} with named atoms.

#ifndef KRIPKE_FORMULA_HPP
#define KRIPKE_FORMULA_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kripke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class Connective { neg, conj, disj, imp, top };

std::string_view connective_name(Connective c);
/// Accepts "neg", "and", "or", "imp", "top" (the CLI spelling).
Connective parse_connective(std::string_view name);

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  enum class Kind { top, atom, neg, conj, disj, imp };

  static Formula top();
  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  /// Binary node of the given kind (conj, disj or imp).
  static Formula binary(Kind kind, Formula l, Formula r);

  Kind kind() const;
  bool is_binary() const;
  /// Atom name; empty for non-atoms.
  const std::string& name() const;
  /// Operand of a negation, or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Tree depth: leaves have depth 0.
  std::size_t depth() const;
  /// Number of connective nodes (negations and binary operators).
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t depth = 0;
  std::size_t size = 0;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline std::size_t Formula::depth() const { return node_->depth; }
inline std::size_t Formula::size() const { return node_->size; }

/// The language fragment L(B, A): permitted connectives B (including top)
/// and permitted atoms A.
struct Fragment {
  std::set<Connective> connectives;
  std::set<std::string> atoms;

  bool allows(Connective c) const { return connectives.count(c) != 0; }
};

bool is_atom_name(std::string_view name);

/// Grammar, loosest to tightest: `->` (right-assoc), `|`, `&` (both
/// left-assoc), prefix `~`, then atoms, `T` and parentheses. The Unicode
/// symbols ¬ ∧ ∨ → ⊤ are accepted as aliases.
Formula parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(render(f)) == f.
std::string render(const Formula& f);

std::set<std::string> atoms(const Formula& f);

bool in_fragment(const Formula& f, const Fragment& frag);

/// Visits every formula of `frag` with depth <= max_depth exactly once,
/// ordered by depth and then by canonical rendering. Each depth layer is
/// materialized before it is visited, so layer sizes bound memory use.
/// Returning false from `visit` stops the enumeration.
void for_each_formula(const Fragment& frag, std::size_t max_depth,
                      const std::function<bool(const Formula&)>& visit);

/// First `limit` formulas of for_each_formula.
std::vector<Formula> enumerate_formulas(const Fragment& frag, std::size_t max_depth,
                                        std::size_t limit = static_cast<std::size_t>(-1));

/// Random formula of depth <= max_depth: each node is a leaf or one of the
/// four connectives with equal probability until the depth budget runs
/// out. Leaves are drawn from `atom_names` and, if allowed, T.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atom_names,
                       std::size_t max_depth, bool allow_top = true);

}  // namespace kripke

#endif  // KRIPKE_FORMULA_HPP
