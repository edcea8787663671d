#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rbs/graded.hpp"

namespace rbs {

// Summand of the cochain algebra: alg-part maps (sV)^n -> sV, R- and S-parts (sV)^n -> V.
enum class Part { Alg, RboR, RboS };
std::string to_string(Part p);  // "alg", "rbo_r", "rbo_s"
Part parse_part(const std::string& s);

// V together with its suspension sV (basis degrees shifted by +1, same basis order).
struct LinftyContext {
  SpacePtr v;
  SpacePtr sv;
  explicit LinftyContext(SpacePtr v_space);
  const SpacePtr& out_space(Part p) const { return p == Part::Alg ? sv : v; }
};

// One homogeneous component.  Its degree in the L-infinity grading is the map degree.
struct Component {
  Part part;
  MultiMap map;
};

// Finite sum of components keyed by (part, arity); zero components are never stored.
class CochainElement {
 public:
  using Key = std::pair<Part, int>;

  CochainElement() = default;
  static CochainElement single(Part p, MultiMap m);

  void add(Part p, const MultiMap& m, const Scalar& c = 1);
  void add_scaled(const CochainElement& o, const Scalar& c);
  const std::map<Key, MultiMap>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  std::optional<int> degree() const;  // throws if components have different degrees
  int max_arity(Part p) const;        // 0 if the part is absent
  friend bool operator==(const CochainElement& a, const CochainElement& b);

 private:
  std::map<Key, MultiMap> comps_;
};

// [sf, sh]_G = sf{sh} - (-1)^{|sf||sh|} sh{sf}.
MultiMap l2_alg(const MultiMap& sf, const MultiMap& sh);

// Brackets on arguments already in canonical order (alg, then R-parts, then S-parts).
// Implements the l_2 bracket on two alg-parts and the operator brackets with one alg-part
// of arity n followed by n operator arguments; every other shape gives no output.
std::vector<Component> l_canonical(const LinftyContext& ctx, const std::vector<Component>& args);
// Same, for arguments in any order: sorts them stably into canonical order and multiplies by
// the Koszul chi sign of that reordering.
std::vector<Component> l_symmetrized(const LinftyContext& ctx, const std::vector<Component>& args);
// Multilinear extension to cochain elements.
CochainElement l_n(const LinftyContext& ctx, const std::vector<CochainElement>& args);

// sum_{i+j=n+1} sum_{sigma in Sh(i, n-i)} chi(sigma) (-1)^{i(j-1)} l_j(l_i(x_sigma...), x_sigma...).
struct JacobiResult {
  CochainElement residual;
  int nonzero_terms = 0;  // number of (i, sigma) pairs with a nonzero outer bracket
  bool ok() const { return residual.is_zero(); }
};
JacobiResult jacobi_residual(const LinftyContext& ctx, const std::vector<CochainElement>& xs);

// Random homogeneous component with coefficients from {-2, -1, 0, 1, 2, 1/2}.
MultiMap random_component(const LinftyContext& ctx, Part p, int arity, int degree, std::mt19937_64& rng,
                          double density = 0.7);
// Degrees for which (part, arity) admits a nonzero map.
std::pair<int, int> feasible_degrees(const LinftyContext& ctx, Part p, int arity);

struct JacobiTrial {
  std::string shape;  // e.g. "alg2[-1] rbo_r1[-2]"
  int nonzero_terms = 0;
  bool ok = true;
};
struct JacobiReport {
  int dim = 0;
  int truncation = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<JacobiTrial> cases;
  int nontrivial() const;
  int failures() const;
  bool ok() const { return failures() == 0; }
};
// V has basis degrees 0, 1, ... (dim <= 2 recommended); tuples of 1..4 random elements of
// arity <= truncation.
JacobiReport check_generalized_jacobi(int dim, int truncation, int trials, std::uint64_t seed);

// sum_{n>=1} (1/n!) l_n(alpha, ..., alpha).  alpha must have degree -1.
CochainElement mc_residual(const LinftyContext& ctx, const CochainElement& alpha);
bool is_mc(const LinftyContext& ctx, const CochainElement& alpha);

// l_1^alpha(x) = sum_{n>=0} (-1)^{n(n+1)/2} / n! l_{n+1}(alpha^n, x).  Throws unless alpha is MC.
CochainElement twist(const LinftyContext& ctx, const CochainElement& alpha, const CochainElement& x);

// All basis cochains (single table entry, coefficient 1) of arity 1..max_arity in every part.
std::vector<CochainElement> basis_cochains(const LinftyContext& ctx, int max_arity);

// Suspension dictionaries for V concentrated in degree 0: sf has the same table as f read on
// sV, and g: (sV)^n -> V has the same table as the operator on V^n.
CochainElement encode_rbs(const LinftyContext& ctx, const MultiMap& mu, const MultiMap& R, const MultiMap& S);
struct DecodedRbs {
  MultiMap mu, R, S;
};
DecodedRbs decode_rbs(const LinftyContext& ctx, const CochainElement& alpha);

}  // namespace rbs
