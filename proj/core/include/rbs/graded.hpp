#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbs/scalar.hpp"

namespace rbs {

struct BasisVector {
  std::string name;
  int degree = 0;
};

class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisVector> basis);
  // Basis named prefix1, prefix2, ... with the given degrees.
  static GradedSpace from_degrees(const std::vector<int>& degrees, const std::string& prefix = "v");

  std::size_t dim() const { return basis_.size(); }
  int degree(std::size_t i) const { return basis_[i].degree; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  const std::vector<BasisVector>& basis() const { return basis_; }
  std::vector<int> degrees() const;
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;  // throws std::invalid_argument

  // Same names, all degrees shifted by k (k = 1 is the suspension).
  GradedSpace shifted(int k) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b);

 private:
  std::vector<BasisVector> basis_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;
SpacePtr make_space(GradedSpace v);

// Sparse vector: basis index -> coefficient, zeros never stored.
using SparseVector = std::map<int, Scalar>;
void axpy(SparseVector& acc, const SparseVector& x, const Scalar& c);

// Homogeneous multilinear map in^{(x)n} -> out of degree d, stored as a sparse table
// from input basis tuples to output vectors.
class MultiMap {
 public:
  using Key = std::vector<int>;
  using Table = std::map<Key, SparseVector>;

  MultiMap(SpacePtr in, SpacePtr out, int arity, int degree);
  static MultiMap identity(SpacePtr v);

  // Adds c * out_basis[output] to the value on the input tuple; rejects inhomogeneous entries.
  void add(const Key& inputs, int output, const Scalar& c);
  void add(const Key& inputs, const SparseVector& value, const Scalar& c = 1);
  SparseVector operator()(const Key& inputs) const;
  Scalar coefficient(const Key& inputs, int output) const;

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const SpacePtr& in_space() const { return in_; }
  const SpacePtr& out_space() const { return out_; }
  const Table& entries() const { return table_; }
  bool is_zero() const { return table_.empty(); }
  std::size_t nnz() const;

  // Same coefficient table read as a map into another space with another degree
  // (used for suspension relabelings).  Homogeneity is rechecked.
  MultiMap relabeled(SpacePtr new_out, int new_degree) const;
  MultiMap with_input_space(SpacePtr new_in, int new_degree) const;

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  MultiMap& operator*=(const Scalar& c);
  void add_scaled(const MultiMap& o, const Scalar& c);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend MultiMap operator*(MultiMap a, const Scalar& c) { return a *= c; }
  friend MultiMap operator*(const Scalar& c, MultiMap a) { return a *= c; }
  // Equal arity, spaces (by degrees) and tables.  Degrees are compared only when both are nonzero.
  friend bool operator==(const MultiMap& a, const MultiMap& b);

 private:
  void check_compatible(const MultiMap& o) const;
  SpacePtr in_, out_;
  int arity_;
  int degree_;
  Table table_;
};

// f o (g_1 (x) ... (x) g_k), nullptr = identity.  The Koszul sign (-1)^{|g_j| * (degrees of
// inputs to the left of g_j's block)} is applied per basis evaluation.
MultiMap full_compose(const MultiMap& f, const std::vector<const MultiMap*>& gs);
// f o (id^{i-1} (x) g (x) id^{n-i}), 1 <= i <= arity(f).
MultiMap insert(const MultiMap& f, int i, const MultiMap& g);

}  // namespace rbs
