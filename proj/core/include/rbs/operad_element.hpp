#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rbs/scalar.hpp"
#include "rbs/tree.hpp"

namespace rbs {

// Finite rational combination of tree monomials.  Zero coefficients are never stored.
class OperadElement {
 public:
  using Map = std::unordered_map<TreeMonomial, Scalar, TreeMonomialHash>;

  OperadElement() = default;
  explicit OperadElement(const TreeMonomial& t, const Scalar& c = 1);
  static OperadElement generator(const Generator& g) { return OperadElement(TreeMonomial::corolla(g)); }
  static OperadElement parse(std::string_view text);  // "2*m2(m2(1, 2), 3) - m2(1, m2(2, 3))"

  void add_term(const TreeMonomial& t, const Scalar& c);
  Scalar coefficient(const TreeMonomial& t) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  // Terms sorted by tree token order; the canonical listing.
  std::vector<std::pair<TreeMonomial, Scalar>> sorted_terms() const;

  // Arity shared by all terms; nullopt for zero.  Throws if terms disagree.
  std::optional<int> arity() const;
  // Degree if homogeneous, nullopt for zero or mixed degree.
  std::optional<int> degree() const;

  OperadElement& operator+=(const OperadElement& o);
  OperadElement& operator-=(const OperadElement& o);
  OperadElement& operator*=(const Scalar& c);
  void add_scaled(const OperadElement& o, const Scalar& c);

  friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
  friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }
  friend OperadElement operator*(OperadElement a, const Scalar& c) { return a *= c; }
  friend OperadElement operator*(const Scalar& c, OperadElement a) { return a *= c; }
  friend OperadElement operator-(OperadElement a) { return a *= Scalar(-1); }
  friend bool operator==(const OperadElement& a, const OperadElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Map terms_;
};

struct Graft {
  int sign = 1;
  TreeMonomial tree;
};

// Simultaneous graft of args[k] onto leaf k+1 of f; nullptr keeps the leaf.
// Sign: Koszul reordering of (vertices of f, then vertices of args in order) into planar order.
Graft graft(const TreeMonomial& f, const std::vector<const TreeMonomial*>& args);
Graft compose_at(const TreeMonomial& f, int i, const TreeMonomial& g);

OperadElement compose_at(const OperadElement& f, int i, const OperadElement& g);
// f o (g_1, ..., g_n) with nullptr meaning identity in that slot.
OperadElement full_compose(const OperadElement& f, const std::vector<const OperadElement*>& args);
OperadElement full_compose(const OperadElement& f, const std::vector<std::optional<OperadElement>>& args);
// f{g_1, ..., g_k}: sum over order-preserving placements of the g's on distinct leaves of f.
OperadElement brace(const OperadElement& f, const std::vector<OperadElement>& args);

// (f{g}){h} - f{g{h}} - f{g,h} - (-1)^{|g||h|} f{h,g}; zero for homogeneous g, h.
OperadElement pre_jacobi_defect(const OperadElement& f, const OperadElement& g, const OperadElement& h);

}  // namespace rbs
