#include "kripke/frame.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace kripke {

Frame::Frame(std::vector<std::string> worlds, std::vector<WorldMask> up)
    : worlds_(std::move(worlds)), up_(std::move(up)) {
  const std::size_t n = worlds_.size();
  if (n == 0) throw FrameError("a frame needs at least one world");
  if (n > kMaxWorlds) throw FrameError("frames are limited to 64 worlds");
  if (up_.size() != n) throw FrameError("order relation size does not match the world count");
  std::set<std::string> seen;
  for (const auto& w : worlds_) {
    if (w.empty()) throw FrameError("empty world name");
    if (!seen.insert(w).second) throw FrameError("duplicate world '" + w + "'");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if ((up_[k] & ~all()) != 0) throw FrameError("order relation mentions unknown worlds");
    if (!leq(k, k)) throw FrameError("order is not reflexive at world '" + worlds_[k] + "'");
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq(k, j)) continue;
      if (j != k && leq(j, k))
        throw FrameError("antisymmetry violated: '" + worlds_[k] + "' and '" + worlds_[j] +
                         "' lie on a cycle");
      if ((up_[j] & ~up_[k]) != 0)
        throw FrameError("order is not transitive above world '" + worlds_[k] + "'");
    }
  }
  down_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(k, j)) down_[j] |= world_bit(k);
}

Frame Frame::from_pairs(std::vector<std::string> worlds,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = worlds.size();
  if (n == 0) throw FrameError("a frame needs at least one world");
  if (n > kMaxWorlds) throw FrameError("frames are limited to 64 worlds");
  std::vector<WorldMask> up(n);
  for (std::size_t k = 0; k < n; ++k) up[k] = world_bit(k);
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw FrameError("order pair refers to an unknown world");
    up[lo] |= world_bit(hi);
  }
  // Warshall closure on rows.
  for (std::size_t via = 0; via < n; ++via)
    for (std::size_t k = 0; k < n; ++k)
      if ((up[k] >> via) & 1U) up[k] |= up[via];
  return Frame(std::move(worlds), std::move(up));
}

std::vector<std::string> Frame::index_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
  return names;
}

std::optional<std::size_t> Frame::find_world(std::string_view name) const {
  for (std::size_t k = 0; k < worlds_.size(); ++k)
    if (worlds_[k] == name) return k;
  return std::nullopt;
}

bool Frame::is_upset(WorldMask set) const {
  if ((set & ~all()) != 0) return false;
  return up_closure(set) == set;
}

WorldMask Frame::up_closure(WorldMask set) const {
  WorldMask out = 0;
  for (WorldMask rest = set & all(); rest != 0; rest &= rest - 1) out |= up_[std::countr_zero(rest)];
  return out;
}

WorldMask Frame::down_closure(WorldMask set) const {
  WorldMask out = 0;
  for (WorldMask rest = set & all(); rest != 0; rest &= rest - 1)
    out |= down_[std::countr_zero(rest)];
  return out;
}

Upset::Upset(const Frame& frame, WorldMask bits) : bits_(bits) {
  if (!frame.is_upset(bits))
    throw FrameError("world set {" + format_worlds(frame, bits & frame.all()) +
                     "} is not upward closed");
}

std::size_t Upset::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<WorldMask> all_upsets(const Frame& frame) {
  // Decide worlds in index order. Taking a world forces its up-set in,
  // leaving it out forces its down-set out, so every branch is consistent.
  std::vector<WorldMask> out;
  const std::size_t n = frame.size();
  std::function<void(std::size_t, WorldMask, WorldMask)> go = [&](std::size_t k, WorldMask in,
                                                                   WorldMask out_set) {
    while (k < n && (((in | out_set) >> k) & 1U)) ++k;
    if (k == n) {
      out.push_back(in);
      return;
    }
    if ((frame.up(k) & out_set) == 0) go(k + 1, in | frame.up(k), out_set);
    if ((frame.down(k) & in) == 0) go(k + 1, in, out_set | frame.down(k));
  };
  go(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Frame& frame) {
  const std::size_t n = frame.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!frame.leq(k, a)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!frame.leq(k, b)) continue;
        if (!frame.leq(a, b) && !frame.leq(b, a)) return false;
      }
    }
  }
  return true;
}

bool is_rooted(const Frame& frame) {
  for (std::size_t k = 0; k < frame.size(); ++k)
    if (frame.up(k) == frame.all()) return true;
  return false;
}

std::string format_worlds(const Frame& frame, WorldMask set) {
  std::string out;
  for (std::size_t k = 0; k < frame.size(); ++k) {
    if (!((set >> k) & 1U)) continue;
    if (!out.empty()) out += ' ';
    out += frame.world_name(k);
  }
  return out;
}

}  // namespace kripke
