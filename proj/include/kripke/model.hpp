// Kripke models: a frame plus a persistent atom valuation, and forcing.

#ifndef KRIPKE_MODEL_HPP
#define KRIPKE_MODEL_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kripke/formula.hpp"
#include "kripke/frame.hpp"

namespace kripke {

class ModelError : public Error {
 public:
  using Error::Error;
};

class Model {
 public:
  /// Throws ModelError if some atom set is not an upset of `frame`.
  Model(Frame frame, std::map<std::string, WorldMask> valuation);

  const Frame& frame() const { return frame_; }
  const std::map<std::string, Upset>& valuation() const { return valuation_; }
  /// Worlds forcing the atom; atoms the model does not mention hold nowhere.
  Upset atom_set(const std::string& atom) const;

 private:
  Frame frame_;
  std::map<std::string, Upset> valuation_;
};

/// Worlds in index order and generating pairs (lower, upper) by name.
struct FrameSpec {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> order;
};

/// Atoms with the worlds they are declared true at. An atom listed with no
/// worlds is part of the model but holds nowhere.
struct AtomSpec {
  std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
};

/// Closes the order reflexively and transitively. With `close_up` the atom
/// sets are replaced by their upward closures; otherwise a non-persistent
/// atom is an error.
Model build_model(const FrameSpec& frame_spec, const AtomSpec& atom_spec, bool close_up = false);

/// Throws ModelError for an out-of-range world.
bool forces(const Model& m, std::size_t world, const Formula& f);
bool forces(const Model& m, std::string_view world, const Formula& f);

/// { k | forces(m, k, f) }.
Upset truth_set(const Model& m, const Formula& f);

// Text format, one directive per line, `#` starts a comment:
//   worlds a b c      declares worlds in index order
//   order a b         b is above a (generating pair)
//   atom p b c        p is forced at b and c
struct ModelText {
  FrameSpec frame;
  AtomSpec atoms;
};

ModelText parse_model_text(std::string_view text);
Model parse_model(std::string_view text, bool close_up = false);
Model load_model(const std::filesystem::path& path, bool close_up = false);

/// Prints the covering pairs of the order and one `atom` line per valuation
/// entry. Parsing the output yields an identical model.
std::string render_model(const Model& m);
/// Same layout for a bare frame (no atom lines).
std::string render_frame(const Frame& frame);

}  // namespace kripke

#endif  // KRIPKE_MODEL_HPP
