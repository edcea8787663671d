#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "rbs/graded.hpp"

namespace rbs {

// Unital graded algebra given by a basis and structure constants.
class BasedAlgebra {
 public:
  using Structure = std::map<std::pair<int, int>, SparseVector>;

  BasedAlgebra(SpacePtr basis, Structure structure, SparseVector unit);
  virtual ~BasedAlgebra() = default;

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  int degree(int i) const { return space_->degree(static_cast<std::size_t>(i)); }
  const SparseVector& unit() const { return unit_; }
  const SparseVector& multiply(int a, int b) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

  // The product as an arity-2, degree-0 MultiMap on the algebra's space.
  MultiMap multiplication_map() const;
  bool is_associative() const;
  bool is_unit_valid() const;

 private:
  SpacePtr space_;
  Structure structure_;
  SparseVector unit_;
  static const SparseVector kEmpty;
};

using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

// End(V) with canonical basis e_p^q (basis index p*dim + q, 0-based p, q; printed 1-based
// as "e<p>^<q>"), degree |v_p| - |v_q| and e_i^j e_k^l = delta_{jk} e_i^l.
class MatrixAlgebra : public BasedAlgebra {
 public:
  explicit MatrixAlgebra(const GradedSpace& v);
  const GradedSpace& base() const { return base_; }
  std::size_t n() const { return base_.dim(); }
  int index(int p, int q) const { return p * static_cast<int>(n()) + q; }
  std::pair<int, int> indices(int k) const { return {k / static_cast<int>(n()), k % static_cast<int>(n())}; }

 private:
  GradedSpace base_;
};

std::shared_ptr<const MatrixAlgebra> make_matrix_algebra(const GradedSpace& v);
// M_n(k) with V concentrated in degree 0.
std::shared_ptr<const MatrixAlgebra> make_matrix_algebra(int n);

// Element of A^{(x) n}, sparse over basis tuples.
class TensorElem {
 public:
  using Key = std::vector<int>;

  TensorElem(AlgebraPtr algebra, int order);
  static TensorElem unit(AlgebraPtr algebra, int order);
  // a_1 (x) ... (x) a_n for sparse factors.
  static TensorElem pure(AlgebraPtr algebra, const std::vector<SparseVector>& factors);

  void add(const Key& key, const Scalar& c);
  Scalar coefficient(const Key& key) const;
  const std::map<Key, Scalar>& entries() const { return entries_; }
  int order() const { return order_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  bool is_zero() const { return entries_.empty(); }
  int key_degree(const Key& key) const;
  std::optional<int> degree() const;  // nullopt if zero or inhomogeneous

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  TensorElem& operator*=(const Scalar& c);
  void add_scaled(const TensorElem& o, const Scalar& c);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(TensorElem a, const Scalar& c) { return a *= c; }
  friend TensorElem operator*(const Scalar& c, TensorElem a) { return a *= c; }
  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  void check_compatible(const TensorElem& o) const;
  AlgebraPtr algebra_;
  int order_;
  std::map<Key, Scalar> entries_;
};

// Slotwise product with the sign of moving each b_j past a_i for i > j.
TensorElem tensor_product_multiply(const TensorElem& a, const TensorElem& b);

// Places the factors of t (order m) at the 1-based strictly increasing slots of an order-n
// tensor and the unit in every other slot: r^{13} = raise_indices(r, {1, 3}, 3).
TensorElem raise_indices(const TensorElem& t, const std::vector<int>& slots, int n);

}  // namespace rbs
