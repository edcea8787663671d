#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "rbs/hrbs.hpp"
#include "rbs/tensor.hpp"

namespace rbs {

struct YBPair {
  TensorElem r;
  TensorElem s;
};

// Families r_n, s_n of order n and degree n-2 for 1 <= n <= truncation, with r_1 = s_1 = d.
struct InfinityYBPair {
  AlgebraPtr algebra;
  int truncation = 1;
  std::map<int, TensorElem> r, s;

  TensorElem r_at(int n) const;  // zero tensor if absent
  TensorElem s_at(int n) const;
  TensorElem d() const { return r_at(1); }
  void validate() const;  // r_1 == s_1, orders, degrees
};

// F(a_1 (x) ... (x) a_{n+1})(x_1, ..., x_n)
//   = (-1)^{sum_k sum_{j>k} |x_k||a_j|} a_1 x_1 a_2 ... x_n a_{n+1}.
// `degree` is required only when t is zero.
MultiMap F_map(const TensorElem& t, std::optional<int> degree = std::nullopt);
// Preimage under F on End(V) by coefficient reading.
TensorElem F_inverse(const MultiMap& m, const std::shared_ptr<const MatrixAlgebra>& A);

struct TensorResidualPair {
  TensorElem first;
  TensorElem second;
  bool ok() const { return first.is_zero() && second.is_zero(); }
};

// r13 r12 - r12 r23 + s23 r13 and s13 r12 - s12 s23 + s23 s13.
TensorResidualPair check_classical_ybp(const YBPair& p);

std::pair<MultiMap, MultiMap> ybp_to_rbs(const YBPair& p);
YBPair rbs_to_ybp(const MultiMap& R, const MultiMap& S, const std::shared_ptr<const MatrixAlgebra>& A);

// Residual of the infinity-AYBE at order n+1 for the r-family ('r') or s-family ('s').
// n = 0 gives d.d.  For n >= 1: T1 + T2 - T3 - T4 with
//   T1 = -sum_{k=1}^{n+1} (s_1^k X_{n+1} - (-1)^{n-1} X_{n+1} r_1^k)
//   T2 = sum_{i+j=n} (-1)^{1+i} X_{i+1}^{1..i+1} X_{j+1}^{i+1..n+1}
//   T3 = sum_{i+j=n} sum_{s=1}^{i} (-1)^{s-1+(j-1)(n-s-j-1)} X_{i+1}^{1..s,s+j+1..n+1} r_{j+1}^{s..s+j}
//   T4 = sum_{i+j=n} sum_{s=1}^{i} (-1)^{s-1+(j-1)(s+1)} s_{j+1}^{s+1..s+j+1} X_{i+1}^{1..s,s+j+1..n+1}
// where i, j >= 1 in T2..T4.
TensorElem aybe_residual(const InfinityYBPair& p, int n, char family);
TensorResidualPair check_infinity_ybp(const InfinityYBPair& p, int n);

// m_1 = -F(d (x) 1) + F(1 (x) d), m_2 = F(1 (x) 1 (x) 1), R_n = F(r_{n+1}), S_n = F(s_{n+1}).
HomotopyRBS chi_map(const InfinityYBPair& p);
// Inverse on End(V); d is supplied explicitly and must reproduce m_1.
InfinityYBPair chi_inverse(const HomotopyRBS& h, const TensorElem& d,
                           const std::shared_ptr<const MatrixAlgebra>& A);

// The four term-family identities relating the tensor and operator sides at arity n.
struct MapIdentity {
  MultiMap lhs;
  MultiMap rhs;
  bool holds() const { return lhs == rhs; }
};
// family 'r' gives the R-side identities, 's' the S-side ones.
MapIdentity equivalence_identity_1(const InfinityYBPair& p, int n, char family);
MapIdentity equivalence_identity_2(const InfinityYBPair& p, int n, char family);
MapIdentity equivalence_identity_3(const InfinityYBPair& p, int n, char family);
MapIdentity equivalence_identity_4(const InfinityYBPair& p, int n, char family);

}  // namespace rbs
