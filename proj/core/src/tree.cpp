#include "rbs/tree.hpp"

#include <cctype>
#include <stdexcept>

namespace rbs {

namespace {

constexpr int kDegreeBias = 2048;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

bool is_builtin_family(char family) {
  switch (family) {
    case 'm': case 'R': case 'S': case 'x': case 'y': case 'z':
      return true;
    default:
      return false;
  }
}

int builtin_degree(char family, int n) {
  switch (family) {
    case 'm': return n - 2;
    case 'R': case 'S': return n - 1;
    case 'x': return -1;
    case 'y': case 'z': return 0;
    default: throw std::invalid_argument(std::string("not a builtin family: ") + family);
  }
}

Generator Generator::builtin(char family, int n) {
  require(is_builtin_family(family), std::string("unsupported family: ") + family);
  require(n >= 1, "generator arity must be >= 1");
  require(family != 'm' || n >= 2, "m_n requires n >= 2");
  return Generator{family, n, builtin_degree(family, n)};
}

Generator Generator::m(int n) { return builtin('m', n); }
Generator Generator::R(int n) { return builtin('R', n); }
Generator Generator::S(int n) { return builtin('S', n); }
Generator Generator::x(int n) { return builtin('x', n); }
Generator Generator::y(int n) { return builtin('y', n); }
Generator Generator::z(int n) { return builtin('z', n); }

Generator Generator::custom(char family, int arity, int degree) {
  require(std::isalpha(static_cast<unsigned char>(family)) && !is_builtin_family(family),
          "custom family must be a letter outside m,R,S,x,y,z");
  require(arity >= 1 && arity < 4096, "generator arity out of range");
  require(degree > -kDegreeBias && degree < kDegreeBias, "generator degree out of range");
  return Generator{family, arity, degree};
}

bool Generator::is_builtin() const { return is_builtin_family(family); }

std::string Generator::name() const {
  std::string s(1, family);
  s += std::to_string(arity);
  if (!is_builtin() && degree != 0) s += "^" + std::to_string(degree);
  return s;
}

TreeMonomial::TreeMonomial() : tokens_{kLeaf}, arity_(1), degree_(0) {}

TreeMonomial::Token TreeMonomial::encode(const Generator& g) {
  return (static_cast<Token>(static_cast<unsigned char>(g.family)) << 24) |
         (static_cast<Token>(g.arity & 0xFFF) << 12) |
         static_cast<Token>((g.degree + kDegreeBias) & 0xFFF);
}

Generator TreeMonomial::decode(Token t) {
  Generator g;
  g.family = static_cast<char>(t >> 24);
  g.arity = static_cast<int>((t >> 12) & 0xFFF);
  g.degree = static_cast<int>(t & 0xFFF) - kDegreeBias;
  return g;
}

TreeMonomial TreeMonomial::corolla(const Generator& g) {
  std::vector<Token> t(1 + g.arity, kLeaf);
  t[0] = encode(g);
  return TreeMonomial(std::move(t), g.arity, g.degree);
}

TreeMonomial TreeMonomial::from_tokens(std::vector<Token> tokens) {
  // A preorder list is well formed iff the open-slot counter hits zero exactly at the end.
  long open = 1;
  int arity = 0, degree = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    require(open > 0, "tree token list has trailing tokens");
    --open;
    if (tokens[i] == kLeaf) {
      ++arity;
    } else {
      Generator g = decode(tokens[i]);
      require(g.arity >= 1, "generator with zero arity");
      open += g.arity;
      degree += g.degree;
    }
  }
  require(open == 0 && !tokens.empty(), "tree token list is incomplete");
  return TreeMonomial(std::move(tokens), arity, degree);
}

std::size_t TreeMonomial::subtree_end(std::size_t pos) const {
  long open = 1;
  while (open > 0) {
    Token t = tokens_[pos++];
    --open;
    if (t != kLeaf) open += decode(t).arity;
  }
  return pos;
}

std::vector<std::size_t> TreeMonomial::children(std::size_t pos) const {
  std::vector<std::size_t> out;
  if (tokens_[pos] == kLeaf) return out;
  int k = decode(tokens_[pos]).arity;
  std::size_t p = pos + 1;
  for (int c = 0; c < k; ++c) {
    out.push_back(p);
    p = subtree_end(p);
  }
  return out;
}

TreeMonomial TreeMonomial::subtree(std::size_t pos) const {
  return from_tokens(std::vector<Token>(tokens_.begin() + static_cast<long>(pos),
                                        tokens_.begin() + static_cast<long>(subtree_end(pos))));
}

std::vector<Generator> TreeMonomial::vertices() const {
  std::vector<Generator> v;
  for (Token t : tokens_)
    if (t != kLeaf) v.push_back(decode(t));
  return v;
}

std::size_t TreeMonomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Token t : tokens_) {
    h ^= t;
    h *= 1099511628211ull;
  }
  return h;
}

std::string TreeMonomial::to_string() const {
  std::string out;
  int leaf = 0;
  // Explicit stack of remaining-children counters.
  std::vector<int> remaining;
  for (Token t : tokens_) {
    if (t == kLeaf) {
      out += std::to_string(++leaf);
    } else {
      out += decode(t).name();
      out += '(';
      remaining.push_back(decode(t).arity);
      continue;
    }
    while (!remaining.empty()) {
      if (--remaining.back() > 0) {
        out += ", ";
        break;
      }
      out += ')';
      remaining.pop_back();
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;
  int next_leaf = 1;
  std::vector<TreeMonomial::Token> out;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree parse error at offset " + std::to_string(i) + ": " + what);
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  int integer() {
    skip();
    bool neg = false;
    if (i < s.size() && s[i] == '-') { neg = true; ++i; }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > 100000) fail("integer too large");
    }
    return static_cast<int>(neg ? -v : v);
  }
  void node() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      int leaf = integer();
      if (leaf != next_leaf) fail("leaves must be numbered 1..n from left to right");
      ++next_leaf;
      out.push_back(TreeMonomial::kLeaf);
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(s[i]))) fail("expected generator or leaf");
    char fam = s[i++];
    int arity = integer();
    Generator g;
    if (is_builtin_family(fam)) {
      g = Generator::builtin(fam, arity);
    } else {
      int deg = 0;
      if (i < s.size() && s[i] == '^') { ++i; deg = integer(); }
      g = Generator::custom(fam, arity, deg);
    }
    out.push_back(TreeMonomial::encode(g));
    skip();
    if (i >= s.size() || s[i] != '(') fail("expected '('");
    ++i;
    for (int c = 0; c < g.arity; ++c) {
      if (c > 0) {
        skip();
        if (i >= s.size() || s[i] != ',') fail("expected ','");
        ++i;
      }
      node();
    }
    skip();
    if (i >= s.size() || s[i] != ')') fail("expected ')' (child count must equal arity)");
    ++i;
  }
};

}  // namespace

TreeMonomial TreeMonomial::parse(std::string_view text) {
  Parser p{text, 0, 1, {}};
  p.node();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return from_tokens(std::move(p.out));
}

}  // namespace rbs
