// The canonical enumeration K_0, K_1, ... of finite Kripke frames.
//
// Frames are ordered by world count; frames with n worlds are the partial
// orders on {0, ..., n-1} in which every world above j has index >= j
// (every finite poset has such a labelling), sorted by the value of their
// n*n relation matrix read row-major with entry (0, 0) most significant.
//
// Layer sizes grow fast: 1, 2, 7, 40, 357, 4824, 96428, 2800472 frames for
// n = 1..8. The catalog stops at 8 worlds, where a relation matrix still
// fits a 64-bit key.

#ifndef KRIPKE_CATALOG_HPP
#define KRIPKE_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "kripke/frame.hpp"

namespace kripke {

inline constexpr std::size_t kMaxCatalogWorlds = 8;

/// Row-major relation-matrix key of an n-world frame (n <= 8).
std::uint64_t relation_key(const Frame& frame);
/// Frame with worlds "0".."n-1" from a relation key.
Frame frame_from_key(std::size_t n, std::uint64_t key);

/// Lazily extended and internally synchronized; frame_at is observably pure.
class FrameCatalog {
 public:
  FrameCatalog();
  ~FrameCatalog();
  FrameCatalog(const FrameCatalog&) = delete;
  FrameCatalog& operator=(const FrameCatalog&) = delete;

  /// Throws FrameError if the index lies beyond the 8-world layer.
  Frame frame_at(std::size_t index) const;
  std::size_t world_count_at(std::size_t index) const;

  /// Sorted relation keys of all n-world frames.
  const std::vector<std::uint64_t>& layer(std::size_t n) const;
  /// Index of the first n-world frame.
  std::size_t layer_begin(std::size_t n) const;
  std::size_t layer_size(std::size_t n) const { return layer(n).size(); }

 private:
  struct Layers;
  std::unique_ptr<Layers> layers_;
};

/// The process-wide catalog.
const FrameCatalog& catalog();

inline Frame frame_at(std::size_t index) { return catalog().frame_at(index); }

/// Decided by exhaustive search over bijections; at most 8 worlds.
bool isomorphic(const Frame& a, const Frame& b);

/// First `count` catalog entries. With `up_to_iso`, an entry isomorphic to
/// an earlier returned one is skipped, so the result holds the first
/// `count` pairwise non-isomorphic frames.
std::vector<Frame> enumerate_frames(std::size_t count, bool up_to_iso);
/// Catalog indices of the frames enumerate_frames returns.
std::vector<std::size_t> enumerate_frame_indices(std::size_t count, bool up_to_iso);

}  // namespace kripke

#endif  // KRIPKE_CATALOG_HPP
