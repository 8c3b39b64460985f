// The countable value space: eventually constant sequences of monotone
// 0/1 functions, one per catalog frame, with componentwise operations.

#ifndef KRIPKE_MANY_VALUED_HPP
#define KRIPKE_MANY_VALUED_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kripke/formula.hpp"
#include "kripke/frame.hpp"
#include "kripke/model.hpp"

namespace kripke {

class ValuationError : public Error {
 public:
  using Error::Error;
};

/// Mask-level truth tables on one frame. `op` must not be Connective::top;
/// `g` is ignored for negation. Inputs are assumed to be upsets.
WorldMask frame_op(Connective op, const Frame& frame, WorldMask f, WorldMask g = 0);

/// Checked version: throws FrameError if an operand is not an upset of
/// `frame`, Error if `g` is missing for a binary op or given for negation.
Upset apply_frame_op(Connective op, const Frame& frame, Upset f, std::optional<Upset> g = std::nullopt);

/// Composes apply_frame_op over the formula tree; T is the full set and an
/// atom missing from `assignment` is the empty set.
Upset evaluate_on_frame(const Frame& frame, const std::map<std::string, Upset>& assignment,
                        const Formula& f);

enum class Tail { zeros, ones };

/// Canonical finite encoding of an eventually constant sequence: component
/// i of the prefix lives on catalog frame i, every later component is the
/// tail constant, and the last prefix entry differs from that constant.
class ValueSeq {
 public:
  /// Validates every component against its catalog frame and absorbs
  /// trailing constant components into the tail.
  static ValueSeq make(std::vector<Upset> prefix, Tail tail);
  /// The designated value: 1_K on every frame.
  static ValueSeq tau() { return ValueSeq({}, Tail::ones); }
  static ValueSeq all_zeros() { return ValueSeq({}, Tail::zeros); }

  const std::vector<Upset>& prefix() const { return prefix_; }
  Tail tail() const { return tail_; }
  /// Component on catalog frame n.
  Upset component(std::size_t n) const;

  friend bool operator==(const ValueSeq& a, const ValueSeq& b) {
    return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
  }
  friend bool operator!=(const ValueSeq& a, const ValueSeq& b) { return !(a == b); }

 private:
  ValueSeq(std::vector<Upset> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail) {}
  std::vector<Upset> prefix_;
  Tail tail_;
};

using Valuation = std::map<std::string, ValueSeq>;

/// Componentwise operation; the shorter prefix is padded with its tail
/// constant and the tails combine by the classical truth table.
ValueSeq seq_op(Connective op, const ValueSeq& x, const std::optional<ValueSeq>& y = std::nullopt);

/// Throws ValuationError if an atom of `f` has no value.
ValueSeq extend_valuation(const Valuation& v, const Formula& f);

bool is_designated(const ValueSeq& x);

/// Visits every value whose prefix has at most `max_prefix` components,
/// shorter prefixes first. Witnesses that the space is enumerable by
/// encoding size. Returning false stops the walk.
void for_each_value(std::size_t max_prefix, const std::function<bool(const ValueSeq&)>& visit);

// Valuation text format, `#` comments:
//   atom p tail=ones              declares p with its tail constant
//   component 2 p = 1 3           component on catalog frame 2 is {1, 3}
// Components not listed default to the tail constant.
Valuation parse_valuation_text(std::string_view text);
Valuation load_valuation(const std::filesystem::path& path);
std::string render_valuation(const Valuation& v);
/// `value tail=...` followed by `component n = ...` lines.
std::string render_value(const ValueSeq& x);

}  // namespace kripke

#endif  // KRIPKE_MANY_VALUED_HPP
