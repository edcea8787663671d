#pragma once

#include <optional>
#include <vector>

#include "rbs/operad_element.hpp"

namespace rbs {

// Simplified differential of the monomial model:
//   dbar m_n = sum_{j=2}^{n-1} (-1)^{1+j(n-1)} m_{n-j+1} o_1 m_j
//   dbar R_n = sum_{r1+r2=n} (-1)^{r1(r2-1)} (R_{r1} o_1 m_2) o_1 R_{r2}, same for S_n.
OperadElement diff_bar(const Generator& g);

// Generator whose leading dbar-term is rooted at pos, if the subtree there starts with a
// typical shape: m_k o_1 m_2 (gives m_{k+1}) or (X_k o_1 m_2) o_1 R_1 (gives X_{k+1}).
std::optional<Generator> typical_divisor_at(const TreeMonomial& t, std::size_t pos);

struct EffectiveDivisor {
  std::size_t root_pos;   // token index of the divisor root
  int leaf;               // the typical leaf, 1-based
  Generator generator;    // generator S with leading term equal to the divisor
};

std::optional<EffectiveDivisor> is_effective(const TreeMonomial& t);

// l_S: coefficient of the leading monomial in dbar S.
Scalar leading_coefficient(const Generator& g);

OperadElement homotopy_H(const TreeMonomial& t);
OperadElement homotopy_H(const OperadElement& e);
OperadElement apply_diff_bar(const OperadElement& e);

// All monomials over {m_2..m_A, R_1..R_A, S_1..S_A} with 1 <= weight <= W and arity <= A,
// sorted by token order.
std::vector<TreeMonomial> enumerate_monomials(int max_arity, int max_weight);

struct HomotopyFailure {
  TreeMonomial tree;
  OperadElement residual;  // dbar H + H dbar - Id applied to tree
};

struct HomotopyReport {
  int max_arity = 0;
  int max_weight = 0;
  std::size_t enumerated = 0;
  std::size_t checked = 0;          // positive-degree monomials
  std::size_t h_squared_nonzero = 0;  // measured only
  std::vector<HomotopyFailure> failures;
  bool ok() const { return failures.empty(); }
};

HomotopyReport check_homotopy(int max_arity, int max_weight);

// Degree-0 monomial free of the relation trees m2 o1 m2, R1 o1 (m2 o1 R1), S1 o1 (m2 o1 R1).
bool is_mrbs_normal(const TreeMonomial& t);

}  // namespace rbs
