#include "rbs/yang_baxter.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace rbs {

namespace {

std::vector<int> range_slots(int a, int b) {
  std::vector<int> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

TensorElem mul(const TensorElem& a, const TensorElem& b) { return tensor_product_multiply(a, b); }

SparseVector basis_vec(int i) { return {{i, Scalar(1)}}; }

}  // namespace

TensorElem InfinityYBPair::r_at(int n) const {
  auto it = r.find(n);
  return it == r.end() ? TensorElem(algebra, n) : it->second;
}

TensorElem InfinityYBPair::s_at(int n) const {
  auto it = s.find(n);
  return it == s.end() ? TensorElem(algebra, n) : it->second;
}

void InfinityYBPair::validate() const {
  if (!algebra) throw std::invalid_argument("InfinityYBPair: missing algebra");
  auto check = [&](const std::map<int, TensorElem>& fam, const char* what) {
    for (const auto& [n, t] : fam) {
      if (n < 1 || n > truncation) throw std::invalid_argument(std::string(what) + ": order outside 1..truncation");
      if (t.order() != n) throw std::invalid_argument(std::string(what) + ": stored order mismatch");
      if (t.is_zero()) continue;
      auto d = t.degree();
      if (!d || *d != n - 2) throw std::invalid_argument(std::string(what) + ": element must be homogeneous of degree n-2");
    }
  };
  check(r, "r");
  check(s, "s");
  if (!(r_at(1) == s_at(1))) throw std::invalid_argument("InfinityYBPair: r_1 and s_1 must coincide");
}

MultiMap F_map(const TensorElem& t, std::optional<int> degree) {
  const int n = t.order() - 1;
  if (n < 1) throw std::invalid_argument("F_map: tensor order must be >= 2");
  const auto& A = *t.algebra();
  if (!t.is_zero()) {
    auto d = t.degree();
    if (!d) throw std::invalid_argument("F_map: tensor must be homogeneous");
    if (degree && *degree != *d) throw std::invalid_argument("F_map: degree hint disagrees with tensor");
    degree = d;
  }
  MultiMap out(A.space(), A.space(), n, degree.value_or(0));
  if (t.is_zero()) return out;
  const int dim = static_cast<int>(A.dim());
  std::vector<int> x(n, 0);
  while (true) {
    SparseVector acc;
    for (const auto& [a, c] : t.entries()) {
      long e = 0;
      for (int k = 0; k < n; ++k)
        for (int j = k + 1; j <= n; ++j) e += static_cast<long>(A.degree(x[k])) * A.degree(a[j]);
      SparseVector cur = basis_vec(a[0]);
      for (int k = 0; k < n && !cur.empty(); ++k) {
        cur = A.multiply(cur, basis_vec(x[k]));
        cur = A.multiply(cur, basis_vec(a[k + 1]));
      }
      axpy(acc, cur, c * sign_pow(e));
    }
    if (!acc.empty()) out.add(x, acc);
    int k = 0;
    while (k < n && ++x[k] == dim) x[k++] = 0;
    if (k == n) break;
  }
  return out;
}

TensorElem F_inverse(const MultiMap& m, const std::shared_ptr<const MatrixAlgebra>& A) {
  if (!A) throw std::invalid_argument("F_inverse: missing matrix algebra");
  const auto& sp = *A->space();
  auto same = [&](const GradedSpace& v) {
    if (v.dim() != sp.dim()) return false;
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v.degree(i) != sp.degree(i)) return false;
    return true;
  };
  if (!same(*m.in_space()) || !same(*m.out_space()))
    throw std::invalid_argument("F_inverse: map is not defined on the matrix algebra End(V)");
  const int n = m.arity();
  if (n < 1) throw std::invalid_argument("F_inverse: arity must be >= 1");
  TensorElem t(A, n + 1);
  // x_k = e_{a_k}^{b_k}, output e_u^v  <->  e_u^{a_1} (x) e_{b_1}^{a_2} (x) ... (x) e_{b_n}^{v}
  for (const auto& [xs, vec] : m.entries())
    for (const auto& [o, c] : vec) {
      auto [u, v] = A->indices(o);
      TensorElem::Key key(n + 1);
      int prev = u;
      for (int k = 0; k < n; ++k) {
        auto [a, b] = A->indices(xs[k]);
        key[k] = A->index(prev, a);
        prev = b;
      }
      key[n] = A->index(prev, v);
      long e = 0;
      for (int k = 0; k < n; ++k)
        for (int j = k + 1; j <= n; ++j) e += static_cast<long>(A->degree(xs[k])) * A->degree(key[j]);
      t.add(key, c * sign_pow(e));
    }
  return t;
}

TensorResidualPair check_classical_ybp(const YBPair& p) {
  const TensorElem &r = p.r, &s = p.s;
  if (r.order() != 2 || s.order() != 2) throw std::invalid_argument("check_classical_ybp: r and s must have order 2");
  auto up = [](const TensorElem& t, int a, int b) { return raise_indices(t, {a, b}, 3); };
  TensorElem r12 = up(r, 1, 2), r13 = up(r, 1, 3), r23 = up(r, 2, 3);
  TensorElem s12 = up(s, 1, 2), s13 = up(s, 1, 3), s23 = up(s, 2, 3);
  return {mul(r13, r12) - mul(r12, r23) + mul(s23, r13), mul(s13, r12) - mul(s12, s23) + mul(s23, s13)};
}

std::pair<MultiMap, MultiMap> ybp_to_rbs(const YBPair& p) { return {F_map(p.r, 0), F_map(p.s, 0)}; }

YBPair rbs_to_ybp(const MultiMap& R, const MultiMap& S, const std::shared_ptr<const MatrixAlgebra>& A) {
  if (R.arity() != 1 || S.arity() != 1) throw std::invalid_argument("rbs_to_ybp: operators must be unary");
  return {F_inverse(R, A), F_inverse(S, A)};
}

namespace {

std::array<TensorElem, 4> aybe_terms(const InfinityYBPair& p, int n, char family) {
  if (family != 'r' && family != 's') throw std::invalid_argument("aybe: family must be 'r' or 's'");
  const int O = n + 1;
  if (O > p.truncation) throw std::out_of_range("aybe: order exceeds truncation");
  auto X = [&](int k) { return family == 'r' ? p.r_at(k) : p.s_at(k); };
  std::array<TensorElem, 4> T{TensorElem(p.algebra, O), TensorElem(p.algebra, O), TensorElem(p.algebra, O),
                              TensorElem(p.algebra, O)};
  const TensorElem XO = X(O), r1 = p.r_at(1), s1 = p.s_at(1);
  for (int k = 1; k <= O; ++k) {
    T[0].add_scaled(mul(raise_indices(s1, {k}, O), XO), -1);
    T[0].add_scaled(mul(XO, raise_indices(r1, {k}, O)), sign_pow(n - 1));
  }
  for (int i = 1; i < n; ++i) {
    const int j = n - i;
    T[1].add_scaled(mul(raise_indices(X(i + 1), range_slots(1, i + 1), O),
                        raise_indices(X(j + 1), range_slots(i + 1, O), O)),
                    sign_pow(1 + i));
    for (int s = 1; s <= i; ++s) {
      std::vector<int> outer_slots = range_slots(1, s);
      for (int a = s + j + 1; a <= O; ++a) outer_slots.push_back(a);
      TensorElem outer = raise_indices(X(i + 1), outer_slots, O);
      T[2].add_scaled(mul(outer, raise_indices(p.r_at(j + 1), range_slots(s, s + j), O)),
                      sign_pow(s - 1 + (j - 1) * (n - s - j - 1)));
      T[3].add_scaled(mul(raise_indices(p.s_at(j + 1), range_slots(s + 1, s + j + 1), O), outer),
                      sign_pow(s - 1 + (j - 1) * (s + 1)));
    }
  }
  return T;
}

}  // namespace

TensorElem aybe_residual(const InfinityYBPair& p, int n, char family) {
  if (n < 0) throw std::invalid_argument("aybe_residual: n must be >= 0");
  if (n == 0) {
    if (family != 'r' && family != 's') throw std::invalid_argument("aybe: family must be 'r' or 's'");
    TensorElem d = p.d();
    return mul(d, d);
  }
  auto T = aybe_terms(p, n, family);
  return T[0] + T[1] - T[2] - T[3];
}

TensorResidualPair check_infinity_ybp(const InfinityYBPair& p, int n) {
  return {aybe_residual(p, n, 'r'), aybe_residual(p, n, 's')};
}

namespace {

MultiMap m1_of(const TensorElem& d) {
  return F_map(raise_indices(d, {2}, 2), -1) - F_map(raise_indices(d, {1}, 2), -1);
}

MultiMap m2_of(const AlgebraPtr& A) { return F_map(TensorElem::unit(A, 3), 0); }

}  // namespace

HomotopyRBS chi_map(const InfinityYBPair& p) {
  p.validate();
  if (p.truncation < 2) throw std::invalid_argument("chi_map: truncation must be >= 2");
  HomotopyRBS h;
  h.space = p.algebra->space();
  h.truncation = p.truncation - 1;
  h.m.emplace(1, m1_of(p.d()));
  if (h.truncation >= 2) h.m.emplace(2, m2_of(p.algebra));
  for (int n = 1; n + 1 <= p.truncation; ++n) {
    h.R.emplace(n, F_map(p.r_at(n + 1), n - 1));
    h.S.emplace(n, F_map(p.s_at(n + 1), n - 1));
  }
  return h;
}

InfinityYBPair chi_inverse(const HomotopyRBS& h, const TensorElem& d, const std::shared_ptr<const MatrixAlgebra>& A) {
  h.validate();
  if (d.order() != 1) throw std::invalid_argument("chi_inverse: d must be an element of A");
  if (!d.is_zero() && d.degree() != -1) throw std::invalid_argument("chi_inverse: d must have degree -1");
  if (!(h.m_at(1) == m1_of(d))) throw std::invalid_argument("chi_inverse: m_1 is not -[d, -]");
  if (h.truncation >= 2 && !(h.m_at(2) == m2_of(A))) throw std::invalid_argument("chi_inverse: m_2 is not the matrix product");
  if (!h.is_dg()) throw std::invalid_argument("chi_inverse: m_k must vanish for k >= 3");
  InfinityYBPair p;
  p.algebra = A;
  p.truncation = h.truncation + 1;
  p.r.emplace(1, d);
  p.s.emplace(1, d);
  for (int n = 1; n <= h.truncation; ++n) {
    p.r.emplace(n + 1, F_inverse(h.R_at(n), A));
    p.s.emplace(n + 1, F_inverse(h.S_at(n), A));
  }
  p.validate();
  return p;
}

namespace {

MultiMap Fx(const InfinityYBPair& p, char family, int order) {
  return F_map(family == 'r' ? p.r_at(order) : p.s_at(order), order - 2);
}

}  // namespace

MapIdentity equivalence_identity_1(const InfinityYBPair& p, int n, char family) {
  auto T = aybe_terms(p, n, family);
  MultiMap m1 = m1_of(p.d());
  MultiMap X = Fx(p, family, n + 1);
  MultiMap lhs = insert(m1, 1, X);
  for (int s = 0; s < n; ++s) lhs.add_scaled(insert(X, s + 1, m1), -sign_pow(n - 1));
  return {lhs, F_map(T[0], n - 2)};
}

MapIdentity equivalence_identity_2(const InfinityYBPair& p, int n, char family) {
  auto T = aybe_terms(p, n, family);
  MultiMap m2 = m2_of(p.algebra);
  MultiMap lhs(p.algebra->space(), p.algebra->space(), n, n - 2);
  for (int i = 1; i < n; ++i) {
    MultiMap a = Fx(p, family, i + 1), b = Fx(p, family, n - i + 1);
    lhs.add_scaled(full_compose(m2, {&a, &b}), sign_pow(1 + i));
  }
  return {lhs, F_map(T[1], n - 2)};
}

MapIdentity equivalence_identity_3(const InfinityYBPair& p, int n, char family) {
  auto T = aybe_terms(p, n, family);
  MultiMap m2 = m2_of(p.algebra);
  MultiMap lhs(p.algebra->space(), p.algebra->space(), n, n - 2);
  for (int j = 1; j < n; ++j) {
    const int i = n - j;  // arity of the outer operator
    MultiMap outer = Fx(p, family, i + 1);
    MultiMap Rj = F_map(p.r_at(j + 1), j - 1);
    MultiMap inner = full_compose(m2, {&Rj, nullptr});
    for (int s = 0; s < i; ++s) {
      const int k = i - s - 1;
      lhs.add_scaled(insert(outer, s + 1, inner), sign_pow(s + (j - 1) * (k + 1)));
    }
  }
  return {lhs, F_map(T[2], n - 2)};
}

MapIdentity equivalence_identity_4(const InfinityYBPair& p, int n, char family) {
  auto T = aybe_terms(p, n, family);
  MultiMap m2 = m2_of(p.algebra);
  MultiMap lhs(p.algebra->space(), p.algebra->space(), n, n - 2);
  for (int j = 1; j < n; ++j) {
    const int i = n - j;
    MultiMap outer = Fx(p, family, i + 1);
    MultiMap Sj = F_map(p.s_at(j + 1), j - 1);
    MultiMap inner = full_compose(m2, {nullptr, &Sj});
    for (int s = 0; s < i; ++s) {
      const int k = i - s - 1;
      lhs.add_scaled(insert(outer, s + 1, inner), sign_pow(s + (j - 1) * k));
    }
  }
  return {lhs, F_map(T[3], n - 2)};
}

}  // namespace rbs
