#pragma once

#include <map>

#include "rbs/graded.hpp"
#include "rbs/tensor.hpp"

namespace rbs {

// Families m_n (degree n-2), R_n and S_n (degree n-1) on one graded space, up to arity
// `truncation`.  Absent entries are zero; m[1] is the differential.
struct HomotopyRBS {
  SpacePtr space;
  int truncation = 1;
  std::map<int, MultiMap> m, R, S;

  MultiMap m_at(int n) const;  // stored map or the zero map of the right shape
  MultiMap R_at(int n) const;
  MultiMap S_at(int n) const;
  // Throws std::invalid_argument on wrong spaces, arities or degrees.
  void validate() const;
  bool is_dg() const;  // m_k = 0 for all k >= 3
};

// sum_{i+j+k=n} (-1)^{i+jk} m_{i+1+k} o (id^i (x) m_j (x) id^k)
MultiMap stasheff_residual(const HomotopyRBS& s, int n);

// Left minus right side of the homotopy Rota-Baxter identity at arity n for the R (resp. S)
// family.  On the right, i = 0..r_1-1 and k = r_1-1-i.
MultiMap hrbs_residual_R(const HomotopyRBS& s, int n);
MultiMap hrbs_residual_S(const HomotopyRBS& s, int n);

enum class DgaSignVariant {
  Corrected,  // exponents that agree with the general identity
  AsPrinted,  // exponents exactly as displayed for the dg case
};

// Residuals of the dg-case identities (requires m_k = 0 for k >= 3).
MultiMap dga_residual_R(const HomotopyRBS& s, int n, DgaSignVariant v = DgaSignVariant::Corrected);
MultiMap dga_residual_S(const HomotopyRBS& s, int n, DgaSignVariant v = DgaSignVariant::Corrected);

struct ClassicalRbsResidual {
  MultiMap rbs1;  // mu(Ra, Rb) - R(mu(Ra, b) + mu(a, Sb))
  MultiMap rbs2;  // mu(Sa, Sb) - S(mu(Ra, b) + mu(a, Sb))
  bool ok() const { return rbs1.is_zero() && rbs2.is_zero(); }
};

ClassicalRbsResidual check_classical_rbs(const BasedAlgebra& A, const MultiMap& R, const MultiMap& S);
// Same with an explicit multiplication map on a degree-0 space.
ClassicalRbsResidual check_classical_rbs(const MultiMap& mu, const MultiMap& R, const MultiMap& S);

}  // namespace rbs
