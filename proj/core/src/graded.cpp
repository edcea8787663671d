#include "rbs/graded.hpp"

#include <set>
#include <stdexcept>

namespace rbs {

GradedSpace::GradedSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (b.name.empty() || !seen.insert(b.name).second)
      throw std::invalid_argument("graded space basis names must be unique and nonempty");
}

GradedSpace GradedSpace::from_degrees(const std::vector<int>& degrees, const std::string& prefix) {
  std::vector<BasisVector> b;
  for (std::size_t i = 0; i < degrees.size(); ++i) b.push_back({prefix + std::to_string(i + 1), degrees[i]});
  return GradedSpace(std::move(b));
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> d;
  for (const auto& b : basis_) d.push_back(b.degree);
  return d;
}

std::optional<std::size_t> GradedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GradedSpace::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown basis vector: " + name);
  return *i;
}

GradedSpace GradedSpace::shifted(int k) const {
  GradedSpace s = *this;
  for (auto& b : s.basis_) b.degree += k;
  return s;
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis_[i].degree != b.basis_[i].degree || a.basis_[i].name != b.basis_[i].name) return false;
  return true;
}

SpacePtr make_space(GradedSpace v) { return std::make_shared<const GradedSpace>(std::move(v)); }

void axpy(SparseVector& acc, const SparseVector& x, const Scalar& c) {
  if (rbs::is_zero(c)) return;
  for (const auto& [k, v] : x) {
    auto [it, ins] = acc.try_emplace(k, v * c);
    if (!ins) {
      it->second += v * c;
      if (rbs::is_zero(it->second)) acc.erase(it);
    }
  }
}

namespace {

bool same_degrees(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (a->dim() != b->dim()) return false;
  for (std::size_t i = 0; i < a->dim(); ++i)
    if (a->degree(i) != b->degree(i)) return false;
  return true;
}

}  // namespace

MultiMap::MultiMap(SpacePtr in, SpacePtr out, int arity, int degree)
    : in_(std::move(in)), out_(std::move(out)), arity_(arity), degree_(degree) {
  if (!in_ || !out_) throw std::invalid_argument("MultiMap: null space");
  if (arity_ < 0) throw std::invalid_argument("MultiMap: negative arity");
}

MultiMap MultiMap::identity(SpacePtr v) {
  MultiMap id(v, v, 1, 0);
  for (std::size_t i = 0; i < v->dim(); ++i) id.add({static_cast<int>(i)}, static_cast<int>(i), 1);
  return id;
}

void MultiMap::add(const Key& inputs, int output, const Scalar& c) {
  if (rbs::is_zero(c)) return;
  if (static_cast<int>(inputs.size()) != arity_) throw std::invalid_argument("MultiMap::add: wrong arity");
  int d = degree_;
  for (int x : inputs) {
    if (x < 0 || static_cast<std::size_t>(x) >= in_->dim()) throw std::out_of_range("MultiMap::add: input index");
    d += in_->degree(x);
  }
  if (output < 0 || static_cast<std::size_t>(output) >= out_->dim())
    throw std::out_of_range("MultiMap::add: output index");
  if (out_->degree(output) != d) throw std::invalid_argument("MultiMap::add: inhomogeneous entry");
  auto& vec = table_[inputs];
  auto [it, ins] = vec.try_emplace(output, c);
  if (!ins) {
    it->second += c;
    if (rbs::is_zero(it->second)) vec.erase(it);
  }
  if (vec.empty()) table_.erase(inputs);
}

void MultiMap::add(const Key& inputs, const SparseVector& value, const Scalar& c) {
  for (const auto& [o, v] : value) add(inputs, o, v * c);
}

SparseVector MultiMap::operator()(const Key& inputs) const {
  auto it = table_.find(inputs);
  return it == table_.end() ? SparseVector{} : it->second;
}

Scalar MultiMap::coefficient(const Key& inputs, int output) const {
  auto it = table_.find(inputs);
  if (it == table_.end()) return 0;
  auto jt = it->second.find(output);
  return jt == it->second.end() ? Scalar(0) : jt->second;
}

std::size_t MultiMap::nnz() const {
  std::size_t n = 0;
  for (const auto& [k, v] : table_) n += v.size();
  return n;
}

MultiMap MultiMap::relabeled(SpacePtr new_out, int new_degree) const {
  MultiMap r(in_, std::move(new_out), arity_, new_degree);
  for (const auto& [k, v] : table_) r.add(k, v);
  return r;
}

MultiMap MultiMap::with_input_space(SpacePtr new_in, int new_degree) const {
  MultiMap r(std::move(new_in), out_, arity_, new_degree);
  for (const auto& [k, v] : table_) r.add(k, v);
  return r;
}

void MultiMap::check_compatible(const MultiMap& o) const {
  if (arity_ != o.arity_ || !same_degrees(in_, o.in_) || !same_degrees(out_, o.out_))
    throw std::invalid_argument("MultiMap: incompatible operands");
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("MultiMap: adding maps of different degrees");
}

void MultiMap::add_scaled(const MultiMap& o, const Scalar& c) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  if (rbs::is_zero(c)) return;
  for (const auto& [k, v] : o.table_) {
    auto& vec = table_[k];
    axpy(vec, v, c);
    if (vec.empty()) table_.erase(k);
  }
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  add_scaled(o, 1);
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  add_scaled(o, -1);
  return *this;
}

MultiMap& MultiMap::operator*=(const Scalar& c) {
  if (rbs::is_zero(c)) {
    table_.clear();
    return *this;
  }
  for (auto& [k, v] : table_)
    for (auto& [o, x] : v) x *= c;
  return *this;
}

bool operator==(const MultiMap& a, const MultiMap& b) {
  if (a.arity_ != b.arity_ || !same_degrees(a.in_, b.in_) || !same_degrees(a.out_, b.out_)) return false;
  if (a.table_.empty() || b.table_.empty()) return a.table_.empty() && b.table_.empty();
  return a.degree_ == b.degree_ && a.table_ == b.table_;
}

MultiMap full_compose(const MultiMap& f, const std::vector<const MultiMap*>& gs) {
  if (static_cast<int>(gs.size()) != f.arity()) throw std::invalid_argument("full_compose: need one map per input");
  SpacePtr in;
  int arity = 0, degree = f.degree();
  for (const MultiMap* g : gs) {
    if (!g) {
      arity += 1;
      if (!in) in = f.in_space();
      else if (!same_degrees(in, f.in_space())) throw std::invalid_argument("full_compose: input spaces differ");
      continue;
    }
    if (!same_degrees(g->out_space(), f.in_space()))
      throw std::invalid_argument("full_compose: output space of an inner map differs from f's input space");
    if (!in) in = g->in_space();
    else if (!same_degrees(in, g->in_space())) throw std::invalid_argument("full_compose: input spaces differ");
    arity += g->arity();
    degree += g->degree();
  }
  if (!in) in = f.in_space();
  MultiMap result(in, f.out_space(), arity, degree);
  if (f.is_zero()) return result;

  // Entry lists per slot: (input block, output vector).
  using Entry = std::pair<const MultiMap::Key*, const SparseVector*>;
  std::vector<MultiMap::Key> id_keys(f.in_space()->dim());
  std::vector<SparseVector> id_vals(f.in_space()->dim());
  for (std::size_t b = 0; b < id_keys.size(); ++b) {
    id_keys[b] = {static_cast<int>(b)};
    id_vals[b] = {{static_cast<int>(b), Scalar(1)}};
  }
  std::vector<std::vector<Entry>> lists(gs.size());
  std::vector<int> block_degree_parity(gs.size(), 0);
  for (std::size_t j = 0; j < gs.size(); ++j) {
    if (!gs[j]) {
      for (std::size_t b = 0; b < id_keys.size(); ++b) lists[j].push_back({&id_keys[b], &id_vals[b]});
    } else {
      for (const auto& [k, v] : gs[j]->entries()) lists[j].push_back({&k, &v});
      block_degree_parity[j] = odd(gs[j]->degree());
      if (lists[j].empty()) return result;
    }
  }
  const std::size_t k = gs.size();
  std::vector<std::size_t> pick(k, 0);
  MultiMap::Key key;
  key.reserve(arity);
  while (true) {
    key.clear();
    long exponent = 0;
    long prefix = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const auto& blk = *lists[j][pick[j]].first;
      if (block_degree_parity[j]) exponent += prefix;
      for (int x : blk) {
        key.push_back(x);
        prefix += in->degree(x);
      }
    }
    // Expand the product of output vectors and apply f.
    SparseVector acc;
    std::vector<SparseVector::const_iterator> it(k), end(k);
    bool empty = false;
    for (std::size_t j = 0; j < k; ++j) {
      it[j] = lists[j][pick[j]].second->begin();
      end[j] = lists[j][pick[j]].second->end();
      if (it[j] == end[j]) empty = true;
    }
    if (!empty) {
      std::vector<SparseVector::const_iterator> start = it;
      MultiMap::Key fkey(k);
      while (true) {
        Scalar c = 1;
        for (std::size_t j = 0; j < k; ++j) {
          fkey[j] = it[j]->first;
          c *= it[j]->second;
        }
        auto fv = f.entries().find(fkey);
        if (fv != f.entries().end()) axpy(acc, fv->second, c);
        std::size_t j = 0;
        while (j < k && ++it[j] == end[j]) {
          it[j] = start[j];
          ++j;
        }
        if (j == k) break;
      }
    }
    if (!acc.empty()) result.add(key, acc, Scalar(sign_pow(exponent)));
    std::size_t j = 0;
    while (j < k && ++pick[j] == lists[j].size()) pick[j++] = 0;
    if (j == k) break;
  }
  return result;
}

MultiMap insert(const MultiMap& f, int i, const MultiMap& g) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("insert: position out of range");
  std::vector<const MultiMap*> gs(f.arity(), nullptr);
  gs[i - 1] = &g;
  return full_compose(f, gs);
}

}  // namespace rbs
