#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "rbs/operad_element.hpp"

namespace rbs {

// Sign exponents of the generator differentials and the map-level identities.
// Only parities matter downstream; values are returned unreduced.
struct SignExponents {
  // 1 + sum_{j=1}^{k} (k-j)(l_j - 1)
  static long alpha(int k, const std::vector<int>& l);
  // 1 + i + (p + sum_{j>=2}(r_j-1))(r_1-i) + sum_{k=2}^{j}(r_k-1) + sum_{k=2}^{p}(r_k-1)(p-k)
  static long beta(int p, int j, int i, const std::vector<int>& r);
  // k(k-1)/2 + sum_{j=1}^{k} (k-j) l_j
  static long delta(int k, const std::vector<int>& l);
  // i + (p + sum_{j>=2}(r_j-1)) k + sum_{t=2}^{j}(r_t-1) + sum_{t=2}^{p}(r_t-1)(p-t)
  static long eta(int p, int j, int i, int k, const std::vector<int>& r);
  // The cooperad exponent gamma is printed with unbound indices; kept as text only.
  static const char* gamma_formula();
};

// All compositions of n into k positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int n, int k);

using GeneratorRule = std::function<OperadElement(const Generator&)>;

// Leibniz extension of a generator differential: for every vertex v the subtree at v is
// replaced by d(label v) grafted with v's children, signed by the degrees of the vertices
// preceding v in planar order.
OperadElement extend_derivation(const GeneratorRule& d, const OperadElement& e);

// Memoizing wrapper; safe to share between threads.
class Derivation {
 public:
  explicit Derivation(GeneratorRule rule) : rule_(std::move(rule)) {}
  const OperadElement& on_generator(const Generator& g) const;
  OperadElement operator()(const OperadElement& e) const;
  GeneratorRule rule() const;

 private:
  GeneratorRule rule_;
  mutable std::mutex mu_;
  mutable std::map<Generator, OperadElement> cache_;
};

// Differential on m_n, R_n, S_n with the printed signs alpha, beta.
OperadElement diff_mrs(const Generator& g);

enum class XyzRange {
  Printed,   // sums as printed: j >= 2, k >= 2, p >= 2
  Extended,  // also admits the unary x_1 (j = 1..n, k >= 1, p >= 1)
};
// Differential on x_n, y_n, z_n built from braces.
OperadElement diff_xyz(const Generator& g, XyzRange range = XyzRange::Printed);

enum class Presentation { Mrs, Xyz };

struct DSquaredCase {
  Generator generator;
  OperadElement differential;
  OperadElement residual;
  bool ok() const { return residual.is_zero(); }
};

struct DSquaredReport {
  Presentation presentation;
  int max_arity;
  std::vector<DSquaredCase> cases;
  bool ok() const;
};

// Generators of a presentation with arity <= max_arity, in (family, arity) order.
std::vector<Generator> presentation_generators(Presentation p, int max_arity);
DSquaredReport check_d_squared(Presentation p, int max_arity);

std::string to_string(Presentation p);

}  // namespace rbs
