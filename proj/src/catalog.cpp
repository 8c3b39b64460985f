#include "kripke/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace kripke {

namespace {

inline unsigned key_bit(std::size_t n, std::size_t row, std::size_t col) {
  return static_cast<unsigned>(n * n - 1 - (row * n + col));
}

std::uint64_t key_of_rows(std::size_t n, const std::vector<WorldMask>& up) {
  std::uint64_t key = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((up[r] >> c) & 1U) key |= std::uint64_t{1} << key_bit(n, r, c);
  return key;
}

std::vector<WorldMask> rows_of_key(std::size_t n, std::uint64_t key) {
  std::vector<WorldMask> up(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((key >> key_bit(n, r, c)) & 1U) up[r] |= world_bit(c);
  return up;
}

void require_catalog_size(std::size_t n) {
  if (n == 0 || n > kMaxCatalogWorlds)
    throw FrameError("the frame catalog covers 1 to 8 worlds, not " + std::to_string(n));
}

}  // namespace

std::uint64_t relation_key(const Frame& frame) {
  require_catalog_size(frame.size());
  std::vector<WorldMask> up(frame.size());
  for (std::size_t k = 0; k < frame.size(); ++k) up[k] = frame.up(k);
  return key_of_rows(frame.size(), up);
}

Frame frame_from_key(std::size_t n, std::uint64_t key) {
  require_catalog_size(n);
  return Frame(Frame::index_names(n), rows_of_key(n, key));
}

struct FrameCatalog::Layers {
  std::mutex mutex;
  // layers[n - 1] holds the sorted keys of the n-world frames.
  std::vector<std::unique_ptr<const std::vector<std::uint64_t>>> layers;
};

FrameCatalog::FrameCatalog() : layers_(std::make_unique<Layers>()) {}
FrameCatalog::~FrameCatalog() = default;

const std::vector<std::uint64_t>& FrameCatalog::layer(std::size_t n) const {
  require_catalog_size(n);
  std::lock_guard lock(layers_->mutex);
  auto& layers = layers_->layers;
  if (layers.empty())
    layers.push_back(std::make_unique<const std::vector<std::uint64_t>>(1, std::uint64_t{1}));
  // Each n-world frame restricts to an (n-1)-world frame on the first n-1
  // worlds; world n-1 sits on top of a down-set of that frame, and every
  // down-set works. So extending each smaller frame by each of its
  // down-sets yields every n-world frame exactly once.
  while (layers.size() < n) {
    const std::size_t m = layers.size();  // extend m-world frames to m + 1
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : *layers.back()) {
      std::vector<WorldMask> up = rows_of_key(m, key);
      Frame small(Frame::index_names(m), up);
      for (WorldMask upset : all_upsets(small)) {
        WorldMask below = small.all() & ~upset;
        std::vector<WorldMask> grown(m + 1);
        for (std::size_t r = 0; r < m; ++r)
          grown[r] = up[r] | (((below >> r) & 1U) ? world_bit(m) : 0);
        grown[m] = world_bit(m);
        next.push_back(key_of_rows(m + 1, grown));
      }
    }
    std::sort(next.begin(), next.end());
    layers.push_back(std::make_unique<const std::vector<std::uint64_t>>(std::move(next)));
  }
  return *layers[n - 1];
}

std::size_t FrameCatalog::layer_begin(std::size_t n) const {
  require_catalog_size(n);
  std::size_t begin = 0;
  for (std::size_t m = 1; m < n; ++m) begin += layer(m).size();
  return begin;
}

std::size_t FrameCatalog::world_count_at(std::size_t index) const {
  std::size_t begin = 0;
  for (std::size_t n = 1; n <= kMaxCatalogWorlds; ++n) {
    const std::size_t size = layer(n).size();
    if (index < begin + size) return n;
    begin += size;
  }
  throw FrameError("catalog index " + std::to_string(index) +
                   " lies beyond the 8-world frames");
}

Frame FrameCatalog::frame_at(std::size_t index) const {
  const std::size_t n = world_count_at(index);
  return frame_from_key(n, layer(n)[index - layer_begin(n)]);
}

const FrameCatalog& catalog() {
  static const FrameCatalog instance;
  return instance;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

/// Least relation key over all relabellings of the worlds.
std::uint64_t canonical_key(const Frame& frame) {
  const std::size_t n = frame.size();
  require_catalog_size(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (frame.leq(perm[r], perm[c])) key |= std::uint64_t{1} << key_bit(n, r, c);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::pair<int, int>> degree_profile(const Frame& frame) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < frame.size(); ++k)
    out.emplace_back(std::popcount(frame.up(k)), std::popcount(frame.down(k)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool isomorphic(const Frame& a, const Frame& b) {
  if (a.size() != b.size()) return false;
  if (degree_profile(a) != degree_profile(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<std::size_t> enumerate_frame_indices(std::size_t count, bool up_to_iso) {
  std::vector<std::size_t> out;
  std::unordered_set<std::uint64_t> seen_classes[kMaxCatalogWorlds + 1];
  for (std::size_t i = 0; out.size() < count; ++i) {
    if (up_to_iso) {
      const Frame frame = frame_at(i);
      if (!seen_classes[frame.size()].insert(canonical_key(frame)).second) continue;
    } else {
      catalog().world_count_at(i);  // throws past the end of the catalog
    }
    out.push_back(i);
  }
  return out;
}

std::vector<Frame> enumerate_frames(std::size_t count, bool up_to_iso) {
  std::vector<Frame> out;
  for (std::size_t i : enumerate_frame_indices(count, up_to_iso)) out.push_back(frame_at(i));
  return out;
}

}  // namespace kripke
