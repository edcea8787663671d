#include "rbs/operad_element.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rbs {

OperadElement::OperadElement(const TreeMonomial& t, const Scalar& c) { add_term(t, c); }

void OperadElement::add_term(const TreeMonomial& t, const Scalar& c) {
  if (rbs::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (rbs::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar OperadElement::coefficient(const TreeMonomial& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<std::pair<TreeMonomial, Scalar>> OperadElement::sorted_terms() const {
  std::vector<std::pair<TreeMonomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::optional<int> OperadElement::arity() const {
  std::optional<int> a;
  for (const auto& [t, c] : terms_) {
    if (a && *a != t.arity()) throw std::logic_error("operad element mixes arities");
    a = t.arity();
  }
  return a;
}

std::optional<int> OperadElement::degree() const {
  std::optional<int> d;
  for (const auto& [t, c] : terms_) {
    if (d && *d != t.degree()) return std::nullopt;
    d = t.degree();
  }
  return d;
}

OperadElement& OperadElement::operator+=(const OperadElement& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

OperadElement& OperadElement::operator*=(const Scalar& c) {
  if (rbs::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

void OperadElement::add_scaled(const OperadElement& o, const Scalar& c) {
  if (rbs::is_zero(c)) return;
  for (const auto& [t, v] : o.terms_) add_term(t, v * c);
}

std::string OperadElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : sorted_terms()) {
    Scalar a = abs(c);
    if (sgn(c) < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    if (a != 1) out += rbs::to_string(a) + "*";
    out += t.to_string();
    first = false;
  }
  return out;
}

OperadElement OperadElement::parse(std::string_view text) {
  OperadElement e;
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  if (text.substr(i) == "0") return e;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    Scalar coef = 1;
    std::size_t star = i;
    while (star < text.size() && (std::isdigit(static_cast<unsigned char>(text[star])) || text[star] == '/')) ++star;
    std::size_t after = star;
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (star > i && after < text.size() && text[after] == '*') {
      coef = parse_scalar(text.substr(i, star - i));
      i = after + 1;
    }
    // The tree extends to the matching close of its outermost parenthesis, or is a bare leaf.
    skip();
    std::size_t j = i;
    int depth = 0;
    while (j < text.size()) {
      char c = text[j];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) { ++j; break; }
      if (depth == 0 && (c == '+' || c == '-') && j > i && text[j - 1] != '^') break;
      ++j;
    }
    e.add_term(TreeMonomial::parse(text.substr(i, j - i)), sign * coef);
    i = j;
    first = false;
  }
  return e;
}

Graft graft(const TreeMonomial& f, const std::vector<const TreeMonomial*>& args) {
  if (static_cast<int>(args.size()) != f.arity())
    throw std::invalid_argument("graft: argument count must equal arity");
  const auto& ft = f.tokens();
  std::vector<TreeMonomial::Token> out;
  std::size_t total = ft.size();
  for (const auto* a : args)
    if (a) total += a->size() - 1;
  out.reserve(total);
  // A block grafted at a leaf moves in front of the f-vertices that follow the leaf.
  const int fdeg = f.degree();
  int prefix = 0;
  long exponent = 0;
  int leaf = 0;
  for (auto tok : ft) {
    if (tok == TreeMonomial::kLeaf) {
      const TreeMonomial* a = args[leaf++];
      if (!a) {
        out.push_back(tok);
      } else {
        out.insert(out.end(), a->tokens().begin(), a->tokens().end());
        exponent += static_cast<long>(a->degree()) * (fdeg - prefix);
      }
    } else {
      out.push_back(tok);
      prefix += TreeMonomial::decode(tok).degree;
    }
  }
  return Graft{sign_pow(exponent), TreeMonomial::from_tokens(std::move(out))};
}

Graft compose_at(const TreeMonomial& f, int i, const TreeMonomial& g) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("compose_at: leaf index out of range");
  std::vector<const TreeMonomial*> args(f.arity(), nullptr);
  args[i - 1] = &g;
  return graft(f, args);
}

OperadElement compose_at(const OperadElement& f, int i, const OperadElement& g) {
  OperadElement r;
  for (const auto& [tf, cf] : f.terms())
    for (const auto& [tg, cg] : g.terms()) {
      Graft gr = compose_at(tf, i, tg);
      r.add_term(gr.tree, cf * cg * gr.sign);
    }
  return r;
}

OperadElement full_compose(const OperadElement& f, const std::vector<const OperadElement*>& args) {
  OperadElement r;
  using Entry = std::pair<const TreeMonomial*, Scalar>;
  std::vector<std::vector<Entry>> lists(args.size());
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!args[k]) {
      lists[k].push_back({nullptr, Scalar(1)});
    } else {
      for (const auto& [t, c] : args[k]->terms()) lists[k].push_back({&t, c});
      if (lists[k].empty()) return r;
    }
  }
  std::vector<std::size_t> idx(args.size(), 0);
  std::vector<const TreeMonomial*> pick(args.size());
  for (const auto& [tf, cf] : f.terms()) {
    if (tf.arity() != static_cast<int>(args.size()))
      throw std::invalid_argument("full_compose: argument count must equal arity");
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      Scalar c = cf;
      for (std::size_t k = 0; k < args.size(); ++k) {
        pick[k] = lists[k][idx[k]].first;
        c *= lists[k][idx[k]].second;
      }
      Graft gr = graft(tf, pick);
      r.add_term(gr.tree, c * gr.sign);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == lists[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return r;
}

OperadElement full_compose(const OperadElement& f, const std::vector<std::optional<OperadElement>>& args) {
  std::vector<const OperadElement*> p;
  p.reserve(args.size());
  for (const auto& a : args) p.push_back(a ? &*a : nullptr);
  return full_compose(f, p);
}

OperadElement brace(const OperadElement& f, const std::vector<OperadElement>& args) {
  if (args.empty()) return f;
  OperadElement r;
  const std::size_t k = args.size();
  for (const auto& [tf, cf] : f.terms()) {
    const int n = tf.arity();
    if (static_cast<int>(k) > n) continue;
    OperadElement single(tf, cf);
    // Increasing positions p[0] < ... < p[k-1] in 0..n-1.
    std::vector<int> p(k);
    for (std::size_t a = 0; a < k; ++a) p[a] = static_cast<int>(a);
    while (true) {
      std::vector<const OperadElement*> slots(n, nullptr);
      for (std::size_t a = 0; a < k; ++a) slots[p[a]] = &args[a];
      r += full_compose(single, slots);
      int a = static_cast<int>(k) - 1;
      while (a >= 0 && p[a] == n - static_cast<int>(k) + a) --a;
      if (a < 0) break;
      ++p[a];
      for (std::size_t b = a + 1; b < k; ++b) p[b] = p[b - 1] + 1;
    }
  }
  return r;
}

OperadElement pre_jacobi_defect(const OperadElement& f, const OperadElement& g, const OperadElement& h) {
  auto dg = g.degree(), dh = h.degree();
  if ((!dg && !g.is_zero()) || (!dh && !h.is_zero()))
    throw std::invalid_argument("pre_jacobi_defect: g and h must be homogeneous");
  int sign = sign_pow(static_cast<long>(dg.value_or(0)) * dh.value_or(0));
  OperadElement lhs = brace(brace(f, {g}), {h});
  lhs -= brace(f, {brace(g, {h})});
  lhs -= brace(f, {g, h});
  lhs.add_scaled(brace(f, {h, g}), Scalar(-sign));
  return lhs;
}

}  // namespace rbs
