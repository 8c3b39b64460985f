#include "kripke/model.hpp"

#include <fstream>
#include <sstream>

namespace kripke {

Model::Model(Frame frame, std::map<std::string, WorldMask> valuation) : frame_(std::move(frame)) {
  for (auto& [atom, bits] : valuation) {
    if (!is_atom_name(atom)) throw ModelError("invalid atom name '" + atom + "'");
    if (!frame_.is_upset(bits))
      throw ModelError("persistency violated for atom '" + atom + "': {" +
                       format_worlds(frame_, bits & frame_.all()) + "} is not upward closed");
    valuation_.emplace(atom, Upset::from_verified(bits));
  }
}

Upset Model::atom_set(const std::string& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? Upset::empty() : it->second;
}

Model build_model(const FrameSpec& frame_spec, const AtomSpec& atom_spec, bool close_up) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < frame_spec.worlds.size(); ++k) {
    if (!index.emplace(frame_spec.worlds[k], k).second)
      throw ModelError("duplicate world '" + frame_spec.worlds[k] + "'");
  }
  auto lookup = [&](const std::string& w) {
    auto it = index.find(w);
    if (it == index.end()) throw ModelError("unknown world '" + w + "'");
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [lo, hi] : frame_spec.order) pairs.emplace_back(lookup(lo), lookup(hi));
  Frame frame = Frame::from_pairs(frame_spec.worlds, pairs);

  std::map<std::string, WorldMask> valuation;
  for (const auto& [atom, worlds] : atom_spec.atoms) {
    WorldMask& bits = valuation[atom];
    for (const auto& w : worlds) bits |= world_bit(lookup(w));
  }
  if (close_up)
    for (auto& [atom, bits] : valuation) bits = frame.up_closure(bits);
  return Model(std::move(frame), std::move(valuation));
}

bool forces(const Model& m, std::size_t world, const Formula& f) {
  const Frame& fr = m.frame();
  if (world >= fr.size()) throw ModelError("world index " + std::to_string(world) + " out of range");
  switch (f.kind()) {
    case Formula::Kind::top: return true;
    case Formula::Kind::atom: return m.atom_set(f.name()).contains(world);
    case Formula::Kind::conj: return forces(m, world, f.lhs()) && forces(m, world, f.rhs());
    case Formula::Kind::disj: return forces(m, world, f.lhs()) || forces(m, world, f.rhs());
    case Formula::Kind::neg:
      for (std::size_t k = 0; k < fr.size(); ++k)
        if (fr.leq(world, k) && forces(m, k, f.lhs())) return false;
      return true;
    case Formula::Kind::imp:
      for (std::size_t k = 0; k < fr.size(); ++k)
        if (fr.leq(world, k) && forces(m, k, f.lhs()) && !forces(m, k, f.rhs())) return false;
      return true;
  }
  return false;
}

bool forces(const Model& m, std::string_view world, const Formula& f) {
  auto k = m.frame().find_world(world);
  if (!k) throw ModelError("unknown world '" + std::string(world) + "'");
  return forces(m, *k, f);
}

Upset truth_set(const Model& m, const Formula& f) {
  WorldMask bits = 0;
  for (std::size_t k = 0; k < m.frame().size(); ++k)
    if (forces(m, k, f)) bits |= world_bit(k);
  return Upset::from_verified(bits);
}

// ---------------------------------------------------------------------------
// Text format

ModelText parse_model_text(std::string_view text) {
  ModelText out;
  bool have_worlds = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string directive;
    if (!(words >> directive)) continue;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (directive == "worlds") {
      if (have_worlds) throw ModelError(where() + "worlds declared twice");
      if (args.empty()) throw ModelError(where() + "'worlds' needs at least one world name");
      out.frame.worlds = args;
      have_worlds = true;
    } else if (directive == "order") {
      if (args.size() != 2) throw ModelError(where() + "'order' takes exactly two worlds");
      out.frame.order.emplace_back(args[0], args[1]);
    } else if (directive == "atom") {
      if (args.empty()) throw ModelError(where() + "'atom' needs an atom name");
      if (!is_atom_name(args[0])) throw ModelError(where() + "invalid atom name '" + args[0] + "'");
      std::vector<std::string> worlds(args.begin() + 1, args.end());
      bool merged = false;
      for (auto& [atom, ws] : out.atoms.atoms) {
        if (atom == args[0]) {
          ws.insert(ws.end(), worlds.begin(), worlds.end());
          merged = true;
        }
      }
      if (!merged) out.atoms.atoms.emplace_back(args[0], std::move(worlds));
    } else {
      throw ModelError(where() + "unknown directive '" + directive + "'");
    }
  }
  if (!have_worlds) throw ModelError("model text has no 'worlds' line");
  return out;
}

Model parse_model(std::string_view text, bool close_up) {
  ModelText parsed = parse_model_text(text);
  return build_model(parsed.frame, parsed.atoms, close_up);
}

Model load_model(const std::filesystem::path& path, bool close_up) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), close_up);
}

std::string render_frame(const Frame& frame) {
  std::string out = "worlds";
  for (const auto& w : frame.worlds()) out += ' ' + w;
  out += '\n';
  const std::size_t n = frame.size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (lo == hi || !frame.leq(lo, hi)) continue;
      bool covering = true;
      for (std::size_t mid = 0; mid < n && covering; ++mid)
        if (mid != lo && mid != hi && frame.leq(lo, mid) && frame.leq(mid, hi)) covering = false;
      if (covering) out += "order " + frame.world_name(lo) + ' ' + frame.world_name(hi) + '\n';
    }
  }
  return out;
}

std::string render_model(const Model& m) {
  std::string out = render_frame(m.frame());
  for (const auto& [atom, set] : m.valuation()) {
    out += "atom " + atom;
    std::string worlds = format_worlds(m.frame(), set.bits());
    if (!worlds.empty()) out += ' ' + worlds;
    out += '\n';
  }
  return out;
}

}  // namespace kripke
