#include "kripke/formula.hpp"

#include <algorithm>
#include <utility>

namespace kripke {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

std::string_view connective_name(Connective c) {
  switch (c) {
    case Connective::neg: return "neg";
    case Connective::conj: return "and";
    case Connective::disj: return "or";
    case Connective::imp: return "imp";
    case Connective::top: return "top";
  }
  return "?";
}

Connective parse_connective(std::string_view name) {
  if (name == "neg") return Connective::neg;
  if (name == "and") return Connective::conj;
  if (name == "or") return Connective::disj;
  if (name == "imp") return Connective::imp;
  if (name == "top") return Connective::top;
  throw Error("unknown connective '" + std::string(name) + "' (expected neg, and, or, imp, top)");
}

// ---------------------------------------------------------------------------
// Construction

namespace {

Formula::Node make_node(Formula::Kind kind, std::string name, std::vector<Formula> children) {
  Formula::Node node{kind, std::move(name), std::move(children)};
  for (const auto& c : node.children) {
    node.depth = std::max(node.depth, c.depth() + 1);
    node.size += c.size();
  }
  if (!node.children.empty()) node.size += 1;
  return node;
}

}  // namespace

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(make_node(Kind::top, "", {})));
  return t;
}

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(make_node(Kind::atom, std::move(name), {})));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(make_node(Kind::neg, "", {std::move(f)})));
}

Formula Formula::binary(Kind kind, Formula l, Formula r) {
  if (kind != Kind::conj && kind != Kind::disj && kind != Kind::imp)
    throw Error("Formula::binary called with a non-binary kind");
  return Formula(std::make_shared<const Node>(make_node(kind, "", {std::move(l), std::move(r)})));
}

Formula Formula::conj(Formula l, Formula r) { return binary(Kind::conj, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(Kind::disj, std::move(l), std::move(r)); }
Formula Formula::imp(Formula l, Formula r) { return binary(Kind::imp, std::move(l), std::move(r)); }

bool Formula::is_binary() const {
  return kind() == Kind::conj || kind() == Kind::disj || kind() == Kind::imp;
}

const Formula& Formula::lhs() const {
  if (node_->children.empty()) throw Error("leaf formula has no operands");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) throw Error("formula has no right operand");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.depth() != b.depth()) return false;
  if (a.kind() == Formula::Kind::atom) return a.name() == b.name();
  return a.node_->children == b.node_->children;
}

bool is_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { atom, top, neg, conj, disj, imp, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::atom: return "atom";
    case Tok::top: return "'T'";
    case Tok::neg: return "'~'";
    case Tok::conj: return "'&'";
    case Tok::disj: return "'|'";
    case Tok::imp: return "'->'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Alias {
  std::string_view spelling;
  Tok kind;
};

// UTF-8 spellings of the Unicode connectives.
constexpr Alias kAliases[] = {
    {"\xC2\xAC", Tok::neg},           // ¬
    {"\xE2\x88\xA7", Tok::conj},      // ∧
    {"\xE2\x88\xA8", Tok::disj},      // ∨
    {"\xE2\x86\x92", Tok::imp},       // →
    {"\xE2\x8A\xA4", Tok::top},       // ⊤
    {"->", Tok::imp},
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') || (text[j] >= '0' && text[j] <= '9') || text[j] == '_'))
        ++j;
      out.push_back({Tok::atom, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (text.substr(i, alias.spelling.size()) == alias.spelling) {
        out.push_back({alias.kind, i, std::string(alias.spelling)});
        i += alias.spelling.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    switch (c) {
      case 'T': out.push_back({Tok::top, i, "T"}); break;
      case '~': out.push_back({Tok::neg, i, "~"}); break;
      case '&': out.push_back({Tok::conj, i, "&"}); break;
      case '|': out.push_back({Tok::disj, i, "|"}); break;
      case '(': out.push_back({Tok::lparen, i, "("}); break;
      case ')': out.push_back({Tok::rparen, i, ")"}); break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c +
                                "'; expected an atom, 'T', '~', '(' or a binary connective");
    }
    ++i;
  }
  out.push_back({Tok::end, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_imp();
    if (peek().kind != Tok::end) fail("expected a binary connective or end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found(describe(peek().kind));
    if (peek().kind == Tok::atom) found += " '" + peek().text + "'";
    throw ParseError(peek().offset, expected + ", found " + found);
  }

  Formula parse_imp() {
    Formula lhs = parse_disj();
    if (peek().kind == Tok::imp) {
      ++pos_;
      return Formula::imp(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_disj() {
    Formula lhs = parse_conj();
    while (peek().kind == Tok::disj) {
      ++pos_;
      lhs = Formula::disj(std::move(lhs), parse_conj());
    }
    return lhs;
  }

  Formula parse_conj() {
    Formula lhs = parse_unary();
    while (peek().kind == Tok::conj) {
      ++pos_;
      lhs = Formula::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::neg:
        ++pos_;
        return Formula::neg(parse_unary());
      case Tok::top:
        ++pos_;
        return Formula::top();
      case Tok::atom: {
        ++pos_;
        return Formula::atom(t.text);
      }
      case Tok::lparen: {
        ++pos_;
        Formula inner = parse_imp();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      default:
        fail("expected an atom, 'T', '~' or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  Parser parser(tokenize(text));
  return parser.parse_all();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::imp: return 1;
    case Formula::Kind::disj: return 2;
    case Formula::Kind::conj: return 3;
    case Formula::Kind::neg: return 4;
    default: return 5;
  }
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::top: out += 'T'; return;
    case Formula::Kind::atom: out += f.name(); return;
    case Formula::Kind::neg:
      out += '~';
      render_operand(f.lhs(), precedence(f.lhs().kind()) < 4, out);
      return;
    default: break;
  }
  const int p = precedence(f.kind());
  const bool right_assoc = f.kind() == Formula::Kind::imp;
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  render_operand(f.lhs(), lp < p || (lp == p && right_assoc), out);
  switch (f.kind()) {
    case Formula::Kind::conj: out += " & "; break;
    case Formula::Kind::disj: out += " | "; break;
    default: out += " -> "; break;
  }
  render_operand(f.rhs(), rp < p || (rp == p && !right_assoc), out);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Structure

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::top: return;
    case Formula::Kind::atom: out.insert(f.name()); return;
    case Formula::Kind::neg: collect_atoms(f.lhs(), out); return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

Connective connective_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::neg: return Connective::neg;
    case Formula::Kind::conj: return Connective::conj;
    case Formula::Kind::disj: return Connective::disj;
    case Formula::Kind::imp: return Connective::imp;
    default: return Connective::top;
  }
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool in_fragment(const Formula& f, const Fragment& frag) {
  switch (f.kind()) {
    case Formula::Kind::top: return frag.allows(Connective::top);
    case Formula::Kind::atom: return frag.atoms.count(f.name()) != 0;
    case Formula::Kind::neg: return frag.allows(Connective::neg) && in_fragment(f.lhs(), frag);
    default:
      return frag.allows(connective_of(f.kind())) && in_fragment(f.lhs(), frag) &&
             in_fragment(f.rhs(), frag);
  }
}

// ---------------------------------------------------------------------------
// Enumeration

void for_each_formula(const Fragment& frag, std::size_t max_depth,
                      const std::function<bool(const Formula&)>& visit) {
  using Layer = std::vector<Formula>;
  std::vector<Layer> layers;

  auto emit_sorted = [&](Layer layer) {
    std::vector<std::pair<std::string, Formula>> keyed;
    keyed.reserve(layer.size());
    for (auto& f : layer) keyed.emplace_back(render(f), std::move(f));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Layer sorted;
    sorted.reserve(keyed.size());
    for (auto& [text, f] : keyed) {
      if (!visit(f)) return false;
      sorted.push_back(std::move(f));
    }
    layers.push_back(std::move(sorted));
    return true;
  };

  Layer leaves;
  if (frag.allows(Connective::top)) leaves.push_back(Formula::top());
  for (const auto& a : frag.atoms) leaves.push_back(Formula::atom(a));
  if (!emit_sorted(std::move(leaves))) return;

  std::vector<Formula::Kind> binaries;
  if (frag.allows(Connective::conj)) binaries.push_back(Formula::Kind::conj);
  if (frag.allows(Connective::disj)) binaries.push_back(Formula::Kind::disj);
  if (frag.allows(Connective::imp)) binaries.push_back(Formula::Kind::imp);

  for (std::size_t d = 1; d <= max_depth; ++d) {
    const Layer& last = layers[d - 1];
    Layer next;
    if (frag.allows(Connective::neg))
      for (const auto& f : last) next.push_back(Formula::neg(f));
    // A binary node has depth d iff one operand has depth d - 1 and the
    // other has depth at most d - 1.
    for (auto kind : binaries) {
      for (std::size_t dl = 0; dl < d; ++dl) {
        for (const auto& l : layers[dl]) {
          for (std::size_t dr = 0; dr < d; ++dr) {
            if (dl != d - 1 && dr != d - 1) continue;
            for (const auto& r : layers[dr]) next.push_back(Formula::binary(kind, l, r));
          }
        }
      }
    }
    if (next.empty()) return;
    if (!emit_sorted(std::move(next))) return;
  }
}

std::vector<Formula> enumerate_formulas(const Fragment& frag, std::size_t max_depth,
                                        std::size_t limit) {
  std::vector<Formula> out;
  if (limit == 0) return out;
  for_each_formula(frag, max_depth, [&](const Formula& f) {
    out.push_back(f);
    return out.size() < limit;
  });
  return out;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atom_names,
                       std::size_t max_depth, bool allow_top) {
  const std::size_t leaf_count = atom_names.size() + (allow_top ? 1 : 0);
  if (leaf_count == 0) throw Error("random_formula needs at least one leaf");
  auto leaf = [&]() {
    std::uniform_int_distribution<std::size_t> pick(0, leaf_count - 1);
    std::size_t i = pick(rng);
    return i < atom_names.size() ? Formula::atom(atom_names[i]) : Formula::top();
  };
  if (max_depth == 0) return leaf();
  std::uniform_int_distribution<int> shape(0, 4);
  switch (shape(rng)) {
    case 0: return leaf();
    case 1: return Formula::neg(random_formula(rng, atom_names, max_depth - 1, allow_top));
    default: break;
  }
  static constexpr Formula::Kind kinds[] = {Formula::Kind::conj, Formula::Kind::disj,
                                             Formula::Kind::imp};
  std::uniform_int_distribution<int> which(0, 2);
  auto kind = kinds[which(rng)];
  Formula l = random_formula(rng, atom_names, max_depth - 1, allow_top);
  Formula r = random_formula(rng, atom_names, max_depth - 1, allow_top);
  return Formula::binary(kind, std::move(l), std::move(r));
}

}  // namespace kripke
