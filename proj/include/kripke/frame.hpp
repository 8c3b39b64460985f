// Finite Kripke frames (posets of named worlds) and their upsets.
//
// World sets are 64-bit masks: bit k stands for the k-th world in input
// order, so a frame holds at most 64 worlds.

#ifndef KRIPKE_FRAME_HPP
#define KRIPKE_FRAME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kripke/formula.hpp"

namespace kripke {

using WorldMask = std::uint64_t;
inline constexpr std::size_t kMaxWorlds = 64;

inline constexpr WorldMask world_bit(std::size_t k) { return WorldMask{1} << k; }

class FrameError : public Error {
 public:
  using Error::Error;
};

/// A finite partial order. `up(k)` is the set of worlds k' with k' >= k.
class Frame {
 public:
  /// Validates reflexivity, transitivity and antisymmetry of `up`.
  Frame(std::vector<std::string> worlds, std::vector<WorldMask> up);

  /// Builds the reflexive-transitive closure of the generating pairs
  /// (lower, upper) given by world index.
  static Frame from_pairs(std::vector<std::string> worlds,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  /// Worlds named "0", "1", ..., as used by the frame catalog.
  static std::vector<std::string> index_names(std::size_t n);

  std::size_t size() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world_name(std::size_t k) const { return worlds_.at(k); }
  std::optional<std::size_t> find_world(std::string_view name) const;

  /// True iff `upper` >= `lower`.
  bool leq(std::size_t lower, std::size_t upper) const { return (up_[lower] >> upper) & 1U; }
  WorldMask up(std::size_t k) const { return up_[k]; }
  WorldMask down(std::size_t k) const { return down_[k]; }
  WorldMask all() const { return size() == 64 ? ~WorldMask{0} : world_bit(size()) - 1; }

  bool is_upset(WorldMask set) const;
  WorldMask up_closure(WorldMask set) const;
  WorldMask down_closure(WorldMask set) const;

  /// Same number of worlds and the same order by index; names ignored.
  bool same_order(const Frame& other) const { return up_ == other.up_; }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.worlds_ == b.worlds_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> worlds_;
  std::vector<WorldMask> up_;
  std::vector<WorldMask> down_;
};

/// Upward-closed set of worlds of some frame: the set form of a monotone
/// function K -> {0, 1}. The full set is 1_K, the empty set 0_K.
class Upset {
 public:
  Upset() = default;
  /// Throws FrameError unless `bits` is an upset of `frame`.
  Upset(const Frame& frame, WorldMask bits);

  /// For callers that have established the invariant themselves.
  static Upset from_verified(WorldMask bits) { return Upset(bits); }
  static Upset full(const Frame& frame) { return Upset(frame.all()); }
  static Upset empty() { return Upset(0); }

  WorldMask bits() const { return bits_; }
  bool contains(std::size_t k) const { return (bits_ >> k) & 1U; }
  std::size_t count() const;

  friend bool operator==(Upset a, Upset b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Upset a, Upset b) { return a.bits_ != b.bits_; }
  friend bool operator<(Upset a, Upset b) { return a.bits_ < b.bits_; }

 private:
  explicit Upset(WorldMask bits) : bits_(bits) {}
  WorldMask bits_ = 0;
};

/// Every upset of the frame, sorted by mask value (so the empty set first).
std::vector<WorldMask> all_upsets(const Frame& frame);

/// Any two successors of a common world are comparable.
bool is_connected(const Frame& frame);

/// Some world lies below every world.
bool is_rooted(const Frame& frame);

/// World names of a mask, in index order, separated by single spaces.
std::string format_worlds(const Frame& frame, WorldMask set);

}  // namespace kripke

#endif  // KRIPKE_FRAME_HPP
