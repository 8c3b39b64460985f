#include "kripke/many_valued.hpp"

#include <fstream>
#include <sstream>

#include "kripke/catalog.hpp"

namespace kripke {

WorldMask frame_op(Connective op, const Frame& frame, WorldMask f, WorldMask g) {
  switch (op) {
    case Connective::neg: return frame.all() & ~frame.down_closure(f);
    case Connective::conj: return f & g;
    case Connective::disj: return f | g;
    case Connective::imp: return frame.all() & ~frame.down_closure(f & ~g);
    case Connective::top: break;
  }
  throw Error("frame_op: T is a constant, not an operation");
}

Upset apply_frame_op(Connective op, const Frame& frame, Upset f, std::optional<Upset> g) {
  if (op == Connective::top) throw Error("apply_frame_op: T is a constant, not an operation");
  if ((op == Connective::neg) == g.has_value())
    throw Error(op == Connective::neg ? "negation takes one operand" : "binary operation needs two operands");
  // Re-validate: the operands may come from another frame.
  Upset checked_f(frame, f.bits());
  Upset checked_g = g ? Upset(frame, g->bits()) : Upset::empty();
  return Upset::from_verified(frame_op(op, frame, checked_f.bits(), checked_g.bits()));
}

Upset evaluate_on_frame(const Frame& frame, const std::map<std::string, Upset>& assignment,
                        const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::top: return Upset::full(frame);
    case Formula::Kind::atom: {
      auto it = assignment.find(f.name());
      return it == assignment.end() ? Upset::empty() : it->second;
    }
    case Formula::Kind::neg:
      return apply_frame_op(Connective::neg, frame, evaluate_on_frame(frame, assignment, f.lhs()));
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::imp: {
      const Connective op = f.kind() == Formula::Kind::conj   ? Connective::conj
                            : f.kind() == Formula::Kind::disj ? Connective::disj
                                                              : Connective::imp;
      return apply_frame_op(op, frame, evaluate_on_frame(frame, assignment, f.lhs()),
                            evaluate_on_frame(frame, assignment, f.rhs()));
    }
  }
  return Upset::empty();
}

// ---------------------------------------------------------------------------
// Value sequences

namespace {

WorldMask tail_mask(Tail tail, std::size_t n) {
  if (tail == Tail::zeros) return 0;
  const std::size_t worlds = catalog().world_count_at(n);
  return worlds == 64 ? ~WorldMask{0} : world_bit(worlds) - 1;
}

bool classical(Connective op, bool x, bool y) {
  switch (op) {
    case Connective::neg: return !x;
    case Connective::conj: return x && y;
    case Connective::disj: return x || y;
    case Connective::imp: return !x || y;
    case Connective::top: return true;
  }
  return false;
}

}  // namespace

ValueSeq ValueSeq::make(std::vector<Upset> prefix, Tail tail) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    Frame frame = frame_at(i);
    if (!frame.is_upset(prefix[i].bits()))
      throw FrameError("component " + std::to_string(i) + " is not an upset of catalog frame " +
                       std::to_string(i));
  }
  while (!prefix.empty() && prefix.back().bits() == tail_mask(tail, prefix.size() - 1))
    prefix.pop_back();
  return ValueSeq(std::move(prefix), tail);
}

Upset ValueSeq::component(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return Upset::from_verified(tail_mask(tail_, n));
}

ValueSeq seq_op(Connective op, const ValueSeq& x, const std::optional<ValueSeq>& y) {
  if (op == Connective::top) throw Error("seq_op: T is a constant, not an operation");
  if ((op == Connective::neg) == y.has_value())
    throw Error(op == Connective::neg ? "negation takes one operand" : "binary operation needs two operands");
  const std::size_t len = std::max(x.prefix().size(), y ? y->prefix().size() : 0);
  std::vector<Upset> prefix;
  prefix.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    Frame frame = frame_at(i);
    WorldMask g = y ? y->component(i).bits() : 0;
    prefix.push_back(Upset::from_verified(frame_op(op, frame, x.component(i).bits(), g)));
  }
  const bool tx = x.tail() == Tail::ones;
  const bool ty = y && y->tail() == Tail::ones;
  return ValueSeq::make(std::move(prefix), classical(op, tx, ty) ? Tail::ones : Tail::zeros);
}

ValueSeq extend_valuation(const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::top: return ValueSeq::tau();
    case Formula::Kind::atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw ValuationError("valuation has no value for atom '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::neg: return seq_op(Connective::neg, extend_valuation(v, f.lhs()));
    case Formula::Kind::conj:
      return seq_op(Connective::conj, extend_valuation(v, f.lhs()), extend_valuation(v, f.rhs()));
    case Formula::Kind::disj:
      return seq_op(Connective::disj, extend_valuation(v, f.lhs()), extend_valuation(v, f.rhs()));
    case Formula::Kind::imp:
      return seq_op(Connective::imp, extend_valuation(v, f.lhs()), extend_valuation(v, f.rhs()));
  }
  throw ValuationError("unhandled formula kind");
}

bool is_designated(const ValueSeq& x) { return x.tail() == Tail::ones && x.prefix().empty(); }

void for_each_value(std::size_t max_prefix, const std::function<bool(const ValueSeq&)>& visit) {
  std::vector<std::vector<WorldMask>> choices;
  for (std::size_t i = 0; i < max_prefix; ++i) choices.push_back(all_upsets(frame_at(i)));

  std::vector<Upset> prefix;
  // The last component of a canonical prefix differs from the tail constant.
  std::function<bool(std::size_t, std::size_t, Tail)> fill = [&](std::size_t i, std::size_t len,
                                                                  Tail tail) {
    if (i == len) return visit(ValueSeq::make(prefix, tail));
    for (WorldMask m : choices[i]) {
      if (i + 1 == len && m == tail_mask(tail, i)) continue;
      prefix.push_back(Upset::from_verified(m));
      const bool go_on = fill(i + 1, len, tail);
      prefix.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  for (std::size_t len = 0; len <= max_prefix; ++len)
    for (Tail tail : {Tail::zeros, Tail::ones})
      if (!fill(0, len, tail)) return;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

Tail parse_tail(const std::string& token, const std::string& where) {
  if (token == "tail=ones") return Tail::ones;
  if (token == "tail=zeros") return Tail::zeros;
  throw ValuationError(where + "expected tail=ones or tail=zeros, found '" + token + "'");
}

std::string render_components(const ValueSeq& x, const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < x.prefix().size(); ++i) {
    out += "component " + std::to_string(i) + label + " =";
    std::string worlds = format_worlds(frame_at(i), x.prefix()[i].bits());
    if (!worlds.empty()) out += ' ' + worlds;
    out += '\n';
  }
  return out;
}

std::string_view tail_name(Tail t) { return t == Tail::ones ? "tail=ones" : "tail=zeros"; }

}  // namespace

Valuation parse_valuation_text(std::string_view text) {
  struct Pending {
    Tail tail;
    std::map<std::size_t, WorldMask> components;
  };
  std::map<std::string, Pending> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "atom") {
      if (tok.size() != 3) throw ValuationError(where + "expected 'atom NAME tail=ones|zeros'");
      if (!is_atom_name(tok[1])) throw ValuationError(where + "invalid atom name '" + tok[1] + "'");
      if (pending.count(tok[1])) throw ValuationError(where + "atom '" + tok[1] + "' declared twice");
      pending[tok[1]] = Pending{parse_tail(tok[2], where), {}};
    } else if (tok[0] == "component") {
      if (tok.size() < 4 || tok[3] != "=")
        throw ValuationError(where + "expected 'component INDEX ATOM = WORLD...'");
      std::size_t index = 0;
      try {
        std::size_t used = 0;
        index = std::stoul(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValuationError(where + "invalid frame index '" + tok[1] + "'");
      }
      auto it = pending.find(tok[2]);
      if (it == pending.end())
        throw ValuationError(where + "atom '" + tok[2] + "' used before its 'atom' line");
      Frame frame = frame_at(index);
      WorldMask bits = 0;
      for (std::size_t i = 4; i < tok.size(); ++i) {
        auto k = frame.find_world(tok[i]);
        if (!k)
          throw ValuationError(where + "catalog frame " + tok[1] + " has no world '" + tok[i] + "'");
        bits |= world_bit(*k);
      }
      if (!frame.is_upset(bits))
        throw ValuationError(where + "component is not an upset of catalog frame " + tok[1]);
      if (!it->second.components.emplace(index, bits).second)
        throw ValuationError(where + "component " + tok[1] + " of '" + tok[2] + "' given twice");
    } else {
      throw ValuationError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  Valuation out;
  for (auto& [atom, p] : pending) {
    std::vector<Upset> prefix;
    if (!p.components.empty()) {
      const std::size_t len = p.components.rbegin()->first + 1;
      for (std::size_t i = 0; i < len; ++i) {
        auto it = p.components.find(i);
        prefix.push_back(Upset::from_verified(it != p.components.end() ? it->second : tail_mask(p.tail, i)));
      }
    }
    out.emplace(atom, ValueSeq::make(std::move(prefix), p.tail));
  }
  return out;
}

Valuation load_valuation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValuationError("cannot open valuation file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_valuation_text(buffer.str());
}

std::string render_valuation(const Valuation& v) {
  std::string out;
  for (const auto& [atom, x] : v) out += "atom " + atom + ' ' + std::string(tail_name(x.tail())) + '\n';
  for (const auto& [atom, x] : v) out += render_components(x, ' ' + atom);
  return out;
}

std::string render_value(const ValueSeq& x) {
  return "value " + std::string(tail_name(x.tail())) + '\n' + render_components(x, "");
}

}  // namespace kripke
