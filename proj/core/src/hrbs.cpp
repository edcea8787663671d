#include "rbs/hrbs.hpp"

#include <stdexcept>

#include "rbs/minimal_model.hpp"

namespace rbs {

namespace {

MultiMap family_at(const HomotopyRBS& s, const std::map<int, MultiMap>& fam, int n, int degree) {
  auto it = fam.find(n);
  if (it != fam.end()) return it->second;
  return MultiMap(s.space, s.space, n, degree);
}

void check_n(const HomotopyRBS& s, int n) {
  if (n < 1) throw std::invalid_argument("residual arity must be >= 1");
  if (n > s.truncation) throw std::out_of_range("residual arity exceeds truncation");
}

// g o (id^i (x) h (x) id^k)
MultiMap plug(const MultiMap& g, int i, const MultiMap& h) { return insert(g, i + 1, h); }

MultiMap compose_all(const MultiMap& f, const std::vector<MultiMap>& gs) {
  std::vector<const MultiMap*> p;
  for (const auto& g : gs) p.push_back(&g);
  return full_compose(f, p);
}

MultiMap hrbs_residual(const HomotopyRBS& s, int n, bool is_R) {
  check_n(s, n);
  auto X = [&](int a) { return is_R ? s.R_at(a) : s.S_at(a); };
  MultiMap res(s.space, s.space, n, n - 2);
  for (int k = 1; k <= n; ++k) {
    MultiMap mk = s.m_at(k);
    if (mk.is_zero()) continue;
    for (const auto& l : compositions(n, k)) {
      std::vector<MultiMap> gs;
      for (int x : l) gs.push_back(X(x));
      res.add_scaled(compose_all(mk, gs), sign_pow(SignExponents::delta(k, l)));
    }
  }
  for (int p = 1; p <= n; ++p) {
    MultiMap mp = s.m_at(p);
    if (mp.is_zero()) continue;
    for (const auto& r : compositions(n, p)) {
      const int r1 = r[0];
      MultiMap outer = X(r1);
      if (outer.is_zero()) continue;
      for (int j = 1; j <= p; ++j) {
        std::vector<MultiMap> store;
        for (int t = 2; t <= j; ++t) store.push_back(s.R_at(r[t - 1]));
        for (int t = j + 1; t <= p; ++t) store.push_back(s.S_at(r[t - 1]));
        std::vector<const MultiMap*> args;
        for (int t = 2; t <= j; ++t) args.push_back(&store[t - 2]);
        args.push_back(nullptr);
        for (int t = j + 1; t <= p; ++t) args.push_back(&store[t - 2]);
        MultiMap inner = full_compose(mp, args);
        for (int i = 0; i <= r1 - 1; ++i) {
          int k = r1 - 1 - i;
          res.add_scaled(plug(outer, i, inner), -sign_pow(SignExponents::eta(p, j, i, k, r)));
        }
      }
    }
  }
  return res;
}

MultiMap dga_residual(const HomotopyRBS& s, int n, bool is_R, DgaSignVariant v) {
  check_n(s, n);
  if (!s.is_dg()) throw std::invalid_argument("dga_residual requires m_k = 0 for k >= 3");
  auto X = [&](int a) { return is_R ? s.R_at(a) : s.S_at(a); };
  const MultiMap m1 = s.m_at(1), m2 = s.m_at(2);
  const bool printed = v == DgaSignVariant::AsPrinted;
  MultiMap res = insert(m1, 1, X(n));
  for (int i = 1; i < n; ++i) {
    MultiMap a = X(i), b = X(n - i);
    res.add_scaled(full_compose(m2, {&a, &b}), sign_pow(i + 1));
  }
  for (int p = 1; p < n; ++p) {
    const int q = n - p;
    MultiMap Xp = X(p), Rq = s.R_at(q), Sq = s.S_at(q);
    MultiMap left = full_compose(m2, {&Rq, nullptr});
    MultiMap right = full_compose(m2, {nullptr, &Sq});
    for (int i = 0; i < p; ++i) {
      long er, es;
      if (is_R) {
        er = printed ? i + (q - 1) * (p - i - 1) : i + (q - 1) * (p - i);
        es = i + (q - 1) * (p - i - 1);
      } else {
        er = i + (q - 1) * (p - i);
        es = printed ? i + (q - 1) * (p - i) : i + (q - 1) * (p - i - 1);
      }
      res.add_scaled(plug(Xp, i, left), -sign_pow(er));
      res.add_scaled(plug(Xp, i, right), -sign_pow(es));
    }
  }
  MultiMap Xn = X(n);
  for (int i = 0; i < n; ++i) res.add_scaled(plug(Xn, i, m1), -sign_pow(n - 1));
  return res;
}

}  // namespace

MultiMap HomotopyRBS::m_at(int n) const { return family_at(*this, m, n, n - 2); }
MultiMap HomotopyRBS::R_at(int n) const { return family_at(*this, R, n, n - 1); }
MultiMap HomotopyRBS::S_at(int n) const { return family_at(*this, S, n, n - 1); }

void HomotopyRBS::validate() const {
  if (!space) throw std::invalid_argument("HomotopyRBS: missing space");
  auto check = [&](const std::map<int, MultiMap>& fam, int shift, const char* what) {
    for (const auto& [n, f] : fam) {
      if (n < 1 || n > truncation) throw std::invalid_argument(std::string(what) + ": arity outside 1..truncation");
      if (f.arity() != n) throw std::invalid_argument(std::string(what) + ": stored arity mismatch");
      if (!(*f.in_space() == *space) || !(*f.out_space() == *space))
        throw std::invalid_argument(std::string(what) + ": map not on the structure's space");
      if (!f.is_zero() && f.degree() != n + shift)
        throw std::invalid_argument(std::string(what) + ": wrong degree");
    }
  };
  check(m, -2, "m");
  check(R, -1, "R");
  check(S, -1, "S");
}

bool HomotopyRBS::is_dg() const {
  for (const auto& [n, f] : m)
    if (n >= 3 && !f.is_zero()) return false;
  return true;
}

MultiMap stasheff_residual(const HomotopyRBS& s, int n) {
  check_n(s, n);
  MultiMap res(s.space, s.space, n, n - 2);
  for (int j = 1; j <= n; ++j) {
    MultiMap mj = s.m_at(j);
    if (mj.is_zero()) continue;
    for (int i = 0; i + j <= n; ++i) {
      int k = n - i - j;
      MultiMap outer = s.m_at(i + 1 + k);
      if (outer.is_zero()) continue;
      res.add_scaled(plug(outer, i, mj), sign_pow(i + j * k));
    }
  }
  return res;
}

MultiMap hrbs_residual_R(const HomotopyRBS& s, int n) { return hrbs_residual(s, n, true); }
MultiMap hrbs_residual_S(const HomotopyRBS& s, int n) { return hrbs_residual(s, n, false); }

MultiMap dga_residual_R(const HomotopyRBS& s, int n, DgaSignVariant v) { return dga_residual(s, n, true, v); }
MultiMap dga_residual_S(const HomotopyRBS& s, int n, DgaSignVariant v) { return dga_residual(s, n, false, v); }

ClassicalRbsResidual check_classical_rbs(const MultiMap& mu, const MultiMap& R, const MultiMap& S) {
  if (mu.arity() != 2 || R.arity() != 1 || S.arity() != 1)
    throw std::invalid_argument("check_classical_rbs: expected binary product and unary operators");
  MultiMap mRid = full_compose(mu, {&R, nullptr});
  MultiMap midS = full_compose(mu, {nullptr, &S});
  MultiMap inner = mRid + midS;
  ClassicalRbsResidual out{full_compose(mu, {&R, &R}), full_compose(mu, {&S, &S})};
  out.rbs1 -= insert(R, 1, inner);
  out.rbs2 -= insert(S, 1, inner);
  return out;
}

ClassicalRbsResidual check_classical_rbs(const BasedAlgebra& A, const MultiMap& R, const MultiMap& S) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(static_cast<int>(i)) != 0) throw std::invalid_argument("check_classical_rbs: algebra must sit in degree 0");
  return check_classical_rbs(A.multiplication_map(), R, S);
}

}  // namespace rbs
