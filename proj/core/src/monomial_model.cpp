#include "rbs/monomial_model.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "rbs/minimal_model.hpp"
#include "rbs/pathlex.hpp"

namespace rbs {

namespace {

OperadElement gen(char f, int n) { return OperadElement::generator(Generator::builtin(f, n)); }

const Derivation& bar_derivation() {
  static const Derivation d(diff_bar);
  return d;
}

const std::uint32_t kM2 = TreeMonomial::encode(Generator{'m', 2, 0});
const std::uint32_t kR1 = TreeMonomial::encode(Generator{'R', 1, 0});

}  // namespace

OperadElement diff_bar(const Generator& g) {
  OperadElement r;
  const int n = g.arity;
  switch (g.family) {
    case 'm':
      for (int j = 2; j <= n - 1; ++j)
        r.add_scaled(compose_at(gen('m', n - j + 1), 1, gen('m', j)), sign_pow(1 + j * (n - 1)));
      return r;
    case 'R': case 'S':
      for (int r1 = 1; r1 < n; ++r1) {
        int r2 = n - r1;
        r.add_scaled(compose_at(compose_at(gen(g.family, r1), 1, gen('m', 2)), 1, gen('R', r2)),
                     sign_pow(r1 * (r2 - 1)));
      }
      return r;
    default:
      throw std::invalid_argument("diff_bar: unsupported family " + g.name());
  }
}

OperadElement apply_diff_bar(const OperadElement& e) { return bar_derivation()(e); }

std::optional<Generator> typical_divisor_at(const TreeMonomial& t, std::size_t pos) {
  const auto& tok = t.tokens();
  if (tok[pos] == TreeMonomial::kLeaf) return std::nullopt;
  Generator g = TreeMonomial::decode(tok[pos]);
  if (tok[pos + 1] != kM2) return std::nullopt;
  if (g.family == 'm') return Generator::m(g.arity + 1);
  if (g.family != 'R' && g.family != 'S') return std::nullopt;
  if (tok[pos + 2] != kR1) return std::nullopt;
  return Generator::builtin(g.family, g.arity + 1);
}

std::optional<EffectiveDivisor> is_effective(const TreeMonomial& t) {
  const auto& tok = t.tokens();
  const std::size_t N = tok.size();
  // parent and child index of every token
  std::vector<long> parent(N, -1);
  std::vector<int> child_index(N, 0);
  {
    std::vector<std::pair<std::size_t, int>> stack;  // (vertex, children seen)
    for (std::size_t p = 0; p < N; ++p) {
      if (!stack.empty()) {
        parent[p] = static_cast<long>(stack.back().first);
        child_index[p] = stack.back().second++;
      }
      if (tok[p] != TreeMonomial::kLeaf) stack.push_back({p, 0});
      while (!stack.empty() &&
             stack.back().second == TreeMonomial::decode(tok[stack.back().first]).arity)
        stack.pop_back();
    }
  }
  auto blocked = [&](std::size_t w) {
    return TreeMonomial::decode(tok[w]).degree > 0 || typical_divisor_at(t, w).has_value();
  };
  bool left_clean = true;  // condition (ii) for all leaves processed so far
  int leaf_no = 0;
  for (std::size_t lp = 0; lp < N && left_clean; ++lp) {
    if (tok[lp] != TreeMonomial::kLeaf) continue;
    ++leaf_no;
    std::vector<std::size_t> path;  // root .. parent of leaf
    for (long q = parent[lp]; q >= 0; q = parent[q]) path.push_back(static_cast<std::size_t>(q));
    std::reverse(path.begin(), path.end());
    for (std::size_t idx = 0; idx < path.size(); ++idx) {
      std::size_t v = path[idx];
      auto S = typical_divisor_at(t, v);
      if (!S) continue;
      // l must be the leftmost leaf above v: every link from v up to l is a first child.
      bool leftmost = child_index[lp] == 0;
      for (std::size_t u = idx + 1; u < path.size() && leftmost; ++u)
        if (child_index[path[u]] != 0) leftmost = false;
      if (!leftmost) continue;
      bool clear = true;
      for (std::size_t u = idx + 1; u < path.size() && clear; ++u)
        if (blocked(path[u])) clear = false;
      if (clear) return EffectiveDivisor{v, leaf_no, *S};
    }
    for (std::size_t w : path)
      if (blocked(w)) left_clean = false;
  }
  return std::nullopt;
}

Scalar leading_coefficient(const Generator& g) {
  static std::mutex mu;
  static std::map<Generator, Scalar> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  OperadElement d = diff_bar(g);
  if (d.is_zero()) throw std::invalid_argument("leading_coefficient: dbar vanishes on " + g.name());
  Scalar c = leading_monomial(d).second;
  cache.emplace(g, c);
  return c;
}

OperadElement homotopy_H(const TreeMonomial& t) {
  OperadElement r;
  auto eff = is_effective(t);
  if (!eff) return r;
  const auto& tok = t.tokens();
  const std::size_t v = eff->root_pos;
  // The divisor's leaves are the non-first children along its spine, in planar order.
  // m-shape: m_k(m_2(a, b), c...)  -> m_{k+1}(a, b, c...)
  // R/S-shape: X_k(m_2(R_1(a), b), c...) -> X_{k+1}(a, b, c...)
  std::vector<TreeMonomial> kids;
  auto outer = t.children(v);
  auto mid = t.children(outer[0]);
  if (eff->generator.family == 'm') {
    kids.push_back(t.subtree(mid[0]));
  } else {
    auto inner = t.children(mid[0]);
    kids.push_back(t.subtree(inner[0]));
  }
  kids.push_back(t.subtree(mid[1]));
  for (std::size_t a = 1; a < outer.size(); ++a) kids.push_back(t.subtree(outer[a]));
  std::vector<const TreeMonomial*> args;
  for (const auto& k : kids) args.push_back(k.is_identity() ? nullptr : &k);
  Graft gr = graft(TreeMonomial::corolla(eff->generator), args);
  int omega = 0;
  for (std::size_t w = 0; w < v; ++w)
    if (tok[w] != TreeMonomial::kLeaf) omega += TreeMonomial::decode(tok[w]).degree;
  std::vector<TreeMonomial::Token> out(tok.begin(), tok.begin() + static_cast<long>(v));
  out.insert(out.end(), gr.tree.tokens().begin(), gr.tree.tokens().end());
  out.insert(out.end(), tok.begin() + static_cast<long>(t.subtree_end(v)), tok.end());
  r.add_term(TreeMonomial::from_tokens(std::move(out)),
             Scalar(sign_pow(omega) * gr.sign) / leading_coefficient(eff->generator));
  return r;
}

OperadElement homotopy_H(const OperadElement& e) {
  OperadElement r;
  for (const auto& [t, c] : e.terms()) r.add_scaled(homotopy_H(t), c);
  return r;
}

std::vector<TreeMonomial> enumerate_monomials(int max_arity, int max_weight) {
  if (max_arity < 1 || max_weight < 1) throw std::invalid_argument("enumerate_monomials: bounds must be >= 1");
  std::vector<Generator> alphabet;
  for (int n = 2; n <= max_arity; ++n) alphabet.push_back(Generator::m(n));
  for (int n = 1; n <= max_arity; ++n) alphabet.push_back(Generator::R(n));
  for (int n = 1; n <= max_arity; ++n) alphabet.push_back(Generator::S(n));
  // by_weight[w]: token lists of trees with exactly w vertices and arity <= max_arity
  std::vector<std::vector<std::vector<TreeMonomial::Token>>> by_weight(max_weight + 1);
  std::vector<std::vector<int>> arity_of(max_weight + 1);
  by_weight[0] = {{TreeMonomial::kLeaf}};
  arity_of[0] = {1};
  std::vector<TreeMonomial> out;
  for (int w = 1; w <= max_weight; ++w) {
    for (const auto& g : alphabet) {
      const int k = g.arity;
      std::vector<int> ws(k, 0);
      // distribute w-1 vertices over k children
      std::function<void(int, int)> dist = [&](int c, int rem) {
        if (c == k) {
          if (rem != 0) return;
          std::vector<std::size_t> pick(k, 0);
          while (true) {
            int ar = 0;
            for (int a = 0; a < k; ++a) ar += arity_of[ws[a]][pick[a]];
            if (ar <= max_arity) {
              std::vector<TreeMonomial::Token> t{TreeMonomial::encode(g)};
              for (int a = 0; a < k; ++a) {
                const auto& s = by_weight[ws[a]][pick[a]];
                t.insert(t.end(), s.begin(), s.end());
              }
              by_weight[w].push_back(std::move(t));
              arity_of[w].push_back(ar);
            }
            int a = 0;
            while (a < k && ++pick[a] == by_weight[ws[a]].size()) pick[a++] = 0;
            if (a == k) break;
          }
          return;
        }
        for (int x = 0; x <= rem; ++x) {
          if (by_weight[x].empty()) continue;
          ws[c] = x;
          dist(c + 1, rem - x);
        }
      };
      dist(0, w - 1);
    }
    for (const auto& t : by_weight[w]) out.push_back(TreeMonomial::from_tokens(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomotopyReport check_homotopy(int max_arity, int max_weight) {
  HomotopyReport rep;
  rep.max_arity = max_arity;
  rep.max_weight = max_weight;
  auto trees = enumerate_monomials(max_arity, max_weight);
  rep.enumerated = trees.size();
  const Derivation& d = bar_derivation();
  for (const auto& t : trees) {
    if (t.degree() < 1) continue;
    ++rep.checked;
    OperadElement x(t);
    OperadElement h = homotopy_H(x);
    OperadElement res = d(h) + homotopy_H(d(x));
    res.add_term(t, Scalar(-1));
    if (!res.is_zero()) rep.failures.push_back({t, res});
    if (!homotopy_H(h).is_zero()) ++rep.h_squared_nonzero;
  }
  return rep;
}

bool is_mrbs_normal(const TreeMonomial& t) {
  if (t.degree() != 0) return false;
  const auto& tok = t.tokens();
  const auto kS1 = TreeMonomial::encode(Generator{'S', 1, 0});
  for (std::size_t p = 0; p < tok.size(); ++p) {
    if (tok[p] == kM2 && tok[p + 1] == kM2) return false;
    if ((tok[p] == kR1 || tok[p] == kS1) && tok[p + 1] == kM2 && tok[p + 2] == kR1) return false;
  }
  return true;
}

}  // namespace rbs
