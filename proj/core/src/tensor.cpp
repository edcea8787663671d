#include "rbs/tensor.hpp"

#include <stdexcept>

namespace rbs {

const SparseVector BasedAlgebra::kEmpty{};

BasedAlgebra::BasedAlgebra(SpacePtr basis, Structure structure, SparseVector unit)
    : space_(std::move(basis)), structure_(std::move(structure)), unit_(std::move(unit)) {
  for (auto it = structure_.begin(); it != structure_.end();) {
    auto [a, b] = it->first;
    for (const auto& [o, c] : it->second)
      if (space_->degree(o) != space_->degree(a) + space_->degree(b))
        throw std::invalid_argument("BasedAlgebra: inhomogeneous structure constant");
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = rbs::is_zero(jt->second) ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? structure_.erase(it) : std::next(it);
  }
  for (const auto& [o, c] : unit_)
    if (space_->degree(o) != 0) throw std::invalid_argument("BasedAlgebra: unit must have degree 0");
}

const SparseVector& BasedAlgebra::multiply(int a, int b) const {
  auto it = structure_.find({a, b});
  return it == structure_.end() ? kEmpty : it->second;
}

SparseVector BasedAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(r, multiply(i, j), x * y);
  return r;
}

MultiMap BasedAlgebra::multiplication_map() const {
  MultiMap m(space_, space_, 2, 0);
  for (const auto& [k, v] : structure_) m.add({k.first, k.second}, v);
  return m;
}

bool BasedAlgebra::is_associative() const {
  const int d = static_cast<int>(dim());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        SparseVector l = multiply(multiply(a, b), SparseVector{{c, Scalar(1)}});
        SparseVector r = multiply(SparseVector{{a, Scalar(1)}}, multiply(b, c));
        if (l != r) return false;
      }
  return true;
}

bool BasedAlgebra::is_unit_valid() const {
  for (int a = 0; a < static_cast<int>(dim()); ++a) {
    SparseVector e{{a, Scalar(1)}};
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) return false;
  }
  return true;
}

namespace {

SpacePtr matrix_space(const GradedSpace& v) {
  std::vector<BasisVector> b;
  for (std::size_t p = 0; p < v.dim(); ++p)
    for (std::size_t q = 0; q < v.dim(); ++q)
      b.push_back({"e" + std::to_string(p + 1) + "^" + std::to_string(q + 1), v.degree(p) - v.degree(q)});
  return make_space(GradedSpace(std::move(b)));
}

BasedAlgebra::Structure matrix_structure(std::size_t n) {
  BasedAlgebra::Structure s;
  const int N = static_cast<int>(n);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < N; ++l) s[{i * N + j, j * N + l}] = {{i * N + l, Scalar(1)}};
  return s;
}

SparseVector matrix_unit(std::size_t n) {
  SparseVector u;
  for (std::size_t p = 0; p < n; ++p) u[static_cast<int>(p * n + p)] = 1;
  return u;
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(const GradedSpace& v)
    : BasedAlgebra(matrix_space(v), matrix_structure(v.dim()), matrix_unit(v.dim())), base_(v) {}

std::shared_ptr<const MatrixAlgebra> make_matrix_algebra(const GradedSpace& v) {
  return std::make_shared<const MatrixAlgebra>(v);
}

std::shared_ptr<const MatrixAlgebra> make_matrix_algebra(int n) {
  return make_matrix_algebra(GradedSpace::from_degrees(std::vector<int>(n, 0)));
}

TensorElem::TensorElem(AlgebraPtr algebra, int order) : algebra_(std::move(algebra)), order_(order) {
  if (!algebra_) throw std::invalid_argument("TensorElem: null algebra");
  if (order_ < 0) throw std::invalid_argument("TensorElem: negative order");
}

TensorElem TensorElem::unit(AlgebraPtr algebra, int order) {
  std::vector<SparseVector> f(order, algebra->unit());
  return pure(std::move(algebra), f);
}

TensorElem TensorElem::pure(AlgebraPtr algebra, const std::vector<SparseVector>& factors) {
  TensorElem t(algebra, static_cast<int>(factors.size()));
  std::map<Key, Scalar> cur{{Key{}, Scalar(1)}};
  for (const auto& f : factors) {
    std::map<Key, Scalar> next;
    for (const auto& [k, c] : cur)
      for (const auto& [i, x] : f) {
        Key nk = k;
        nk.push_back(i);
        next[nk] += c * x;
      }
    cur.swap(next);
  }
  for (const auto& [k, c] : cur) t.add(k, c);
  return t;
}

void TensorElem::add(const Key& key, const Scalar& c) {
  if (rbs::is_zero(c)) return;
  if (static_cast<int>(key.size()) != order_) throw std::invalid_argument("TensorElem::add: wrong order");
  for (int i : key)
    if (i < 0 || static_cast<std::size_t>(i) >= algebra_->dim()) throw std::out_of_range("TensorElem::add: index");
  auto [it, ins] = entries_.try_emplace(key, c);
  if (!ins) {
    it->second += c;
    if (rbs::is_zero(it->second)) entries_.erase(it);
  }
}

Scalar TensorElem::coefficient(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Scalar(0) : it->second;
}

int TensorElem::key_degree(const Key& key) const {
  int d = 0;
  for (int i : key) d += algebra_->degree(i);
  return d;
}

std::optional<int> TensorElem::degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : entries_) {
    int kd = key_degree(k);
    if (d && *d != kd) return std::nullopt;
    d = kd;
  }
  return d;
}

void TensorElem::check_compatible(const TensorElem& o) const {
  if (order_ != o.order_) throw std::invalid_argument("TensorElem: order mismatch");
  if (algebra_ != o.algebra_ && !(*algebra_->space() == *o.algebra_->space()))
    throw std::invalid_argument("TensorElem: different algebras");
}

void TensorElem::add_scaled(const TensorElem& o, const Scalar& c) {
  check_compatible(o);
  for (const auto& [k, v] : o.entries_) add(k, v * c);
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  add_scaled(o, 1);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  add_scaled(o, -1);
  return *this;
}

TensorElem& TensorElem::operator*=(const Scalar& c) {
  if (rbs::is_zero(c)) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

TensorElem tensor_product_multiply(const TensorElem& a, const TensorElem& b) {
  if (a.order() != b.order()) throw std::invalid_argument("tensor_product_multiply: order mismatch");
  if (a.algebra() != b.algebra() && !(*a.algebra()->space() == *b.algebra()->space()))
    throw std::invalid_argument("tensor_product_multiply: different algebras");
  const auto& A = *a.algebra();
  const int n = a.order();
  TensorElem r(a.algebra(), n);
  std::vector<const SparseVector*> prods(n);
  for (const auto& [ka, ca] : a.entries())
    for (const auto& [kb, cb] : b.entries()) {
      bool zero = false;
      for (int i = 0; i < n && !zero; ++i) {
        prods[i] = &A.multiply(ka[i], kb[i]);
        if (prods[i]->empty()) zero = true;
      }
      if (zero) continue;
      // b_j moves past a_i for every i > j
      long e = 0, suffix = 0;
      for (int j = n - 1; j >= 0; --j) {
        e += static_cast<long>(A.degree(kb[j])) * suffix;
        suffix += A.degree(ka[j]);
      }
      Scalar c = ca * cb * sign_pow(e);
      // expand the product of slot vectors
      std::vector<SparseVector::const_iterator> it(n);
      for (int i = 0; i < n; ++i) it[i] = prods[i]->begin();
      TensorElem::Key key(n);
      while (true) {
        Scalar x = c;
        for (int i = 0; i < n; ++i) {
          key[i] = it[i]->first;
          x *= it[i]->second;
        }
        r.add(key, x);
        int i = 0;
        while (i < n && ++it[i] == prods[i]->end()) {
          it[i] = prods[i]->begin();
          ++i;
        }
        if (i == n) break;
      }
    }
  return r;
}

TensorElem raise_indices(const TensorElem& t, const std::vector<int>& slots, int n) {
  if (static_cast<int>(slots.size()) != t.order()) throw std::invalid_argument("raise_indices: slot count");
  for (std::size_t a = 0; a < slots.size(); ++a) {
    if (slots[a] < 1 || slots[a] > n) throw std::out_of_range("raise_indices: slot out of range");
    if (a > 0 && slots[a] <= slots[a - 1]) throw std::invalid_argument("raise_indices: slots must increase");
  }
  const auto& unit = t.algebra()->unit();
  std::vector<int> free_slots;
  for (int s = 1, a = 0; s <= n; ++s) {
    if (a < static_cast<int>(slots.size()) && slots[a] == s) ++a;
    else free_slots.push_back(s);
  }
  TensorElem r(t.algebra(), n);
  std::vector<SparseVector::const_iterator> it(free_slots.size());
  for (const auto& [k, c] : t.entries()) {
    TensorElem::Key key(n);
    for (std::size_t a = 0; a < slots.size(); ++a) key[slots[a] - 1] = k[a];
    for (auto& i : it) i = unit.begin();
    if (!free_slots.empty() && unit.empty()) continue;
    while (true) {
      Scalar x = c;
      for (std::size_t a = 0; a < free_slots.size(); ++a) {
        key[free_slots[a] - 1] = it[a]->first;
        x *= it[a]->second;
      }
      r.add(key, x);
      std::size_t a = 0;
      while (a < it.size() && ++it[a] == unit.end()) it[a++] = unit.begin();
      if (a == it.size()) break;
    }
  }
  return r;
}

}  // namespace rbs
