#include <doctest.h>

#include <random>

#include "rbs/graded.hpp"
#include "rbs/tensor.hpp"

using namespace rbs;

namespace {

std::mt19937_64 rng(5);

MultiMap random_map(const SpacePtr& v, int arity, int degree) {
  MultiMap m(v, v, arity, degree);
  std::vector<int> x(arity, 0);
  const int dim = static_cast<int>(v->dim());
  while (true) {
    int d = degree;
    for (int i : x) d += v->degree(i);
    for (int o = 0; o < dim; ++o)
      if (v->degree(o) == d && rng() % 3 != 0) m.add(x, o, Scalar(static_cast<int>(rng() % 5) - 2));
    int k = 0;
    while (k < arity && ++x[k] == dim) x[k++] = 0;
    if (k == arity) break;
  }
  return m;
}

}  // namespace

TEST_SUITE("graded") {
  TEST_CASE("spaces") {
    auto v = GradedSpace::from_degrees({0, 1, 1});
    CHECK(v.dim() == 3);
    CHECK(v.name(1) == "v2");
    CHECK(v.require_index("v3") == 2);
    CHECK_THROWS(v.require_index("w"));
    CHECK(v.shifted(1).degrees() == std::vector<int>{1, 2, 2});
    CHECK_THROWS(GradedSpace({{"a", 0}, {"a", 1}}));
  }

  TEST_CASE("homogeneity is enforced") {
    auto v = make_space(GradedSpace::from_degrees({0, 1}));
    MultiMap m(v, v, 1, 1);
    m.add({0}, 1, 1);
    CHECK_THROWS(m.add({1}, 0, 1));
    CHECK_THROWS(m.add({0, 0}, 1, 1));
  }

  TEST_CASE("insert into the identity") {
    auto v = make_space(GradedSpace::from_degrees({0, 1}));
    auto g = random_map(v, 2, 1);
    CHECK(insert(MultiMap::identity(v), 1, g) == g);
  }

  TEST_CASE("degree-zero insert is plain composition") {
    auto v = make_space(GradedSpace::from_degrees({0, 0, 0}));
    auto f = random_map(v, 2, 0), g = random_map(v, 2, 0);
    auto h = insert(f, 2, g);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          SparseVector expect;
          for (const auto& [o, k] : g({b, c})) axpy(expect, f({a, o}), k);
          CHECK(h({a, b, c}) == expect);
        }
  }

  TEST_CASE("odd insert against the Koszul oracle") {
    auto v = make_space(GradedSpace::from_degrees({0, 1}));
    for (int t = 0; t < 20; ++t) {
      auto f = random_map(v, 2, static_cast<int>(rng() % 3) - 1);
      auto g = random_map(v, 1, 1);
      auto h = insert(f, 2, g);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          // g passes x_a: (-1)^{|g||x_a|}
          const int sign = v->degree(a) % 2 ? -1 : 1;
          SparseVector expect;
          for (const auto& [o, k] : g({b})) axpy(expect, f({a, o}), k * sign);
          CHECK(h({a, b}) == expect);
        }
    }
  }

  TEST_CASE("full composition equals iterated insertion") {
    auto v = make_space(GradedSpace::from_degrees({0, 1}));
    for (int t = 0; t < 20; ++t) {
      auto f = random_map(v, 2, 0);
      auto g1 = random_map(v, 2, 1), g2 = random_map(v, 1, -1);
      auto iter = insert(insert(f, 1, g1), 1 + g1.arity(), g2);
      // right-to-left picks up the sign of g2 passing g1
      auto rev = insert(insert(f, 2, g2), 1, g1);
      CHECK(rev == iter * Scalar(sign_pow(static_cast<long>(g1.degree()) * g2.degree())));
      CHECK(full_compose(f, {&g1, &g2}) == iter);
    }
  }

  TEST_CASE("arithmetic") {
    auto v = make_space(GradedSpace::from_degrees({0, 1}));
    auto f = random_map(v, 2, 0);
    CHECK((f - f).is_zero());
    CHECK((f + f) == f * Scalar(2));
    MultiMap odd(v, v, 2, 1);
    odd.add({0, 0}, 1, 1);
    CHECK_THROWS(f += odd);
  }
}

TEST_SUITE("graded") {
  TEST_CASE("tensor products") {
    auto A = make_matrix_algebra(2);
    auto e = [&](int p, int q) { return SparseVector{{A->index(p - 1, q - 1), 1}}; };
    auto t = TensorElem::pure(A, {e(1, 2), e(2, 1)});
    CHECK(tensor_product_multiply(TensorElem::unit(A, 2), t) == t);
    auto a = TensorElem::pure(A, {e(1, 2), A->unit(), e(1, 2)});
    auto b = TensorElem::pure(A, {e(1, 2), e(1, 2), A->unit()});
    CHECK(tensor_product_multiply(a, b).is_zero());
    auto c = TensorElem::pure(A, {e(2, 1), e(1, 1), A->unit()});
    CHECK(tensor_product_multiply(a, c) == TensorElem::pure(A, {e(1, 1), e(1, 1), e(1, 2)}));
  }

  TEST_CASE("raise indices") {
    auto A = make_matrix_algebra(2);
    auto e = [&](int p, int q) { return SparseVector{{A->index(p - 1, q - 1), 1}}; };
    auto r = TensorElem::pure(A, {e(1, 2), e(2, 2)}) + TensorElem::pure(A, {e(2, 1), e(1, 1)}) * Scalar(3);
    CHECK(raise_indices(r, {1, 2}, 3) ==
          TensorElem::pure(A, {e(1, 2), e(2, 2), A->unit()}) + TensorElem::pure(A, {e(2, 1), e(1, 1), A->unit()}) * Scalar(3));
    CHECK(raise_indices(r, {1, 3}, 3) ==
          TensorElem::pure(A, {e(1, 2), A->unit(), e(2, 2)}) + TensorElem::pure(A, {e(2, 1), A->unit(), e(1, 1)}) * Scalar(3));
    CHECK(raise_indices(r, {1, 2}, 2) == r);
    CHECK_THROWS(raise_indices(r, {2, 1}, 3));
  }

  TEST_CASE("graded tensor signs") {
    auto A = make_matrix_algebra(GradedSpace::from_degrees({0, 1}));
    auto e = [&](int p, int q) { return SparseVector{{A->index(p - 1, q - 1), 1}}; };
    // (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2
    auto a = TensorElem::pure(A, {e(1, 2), e(1, 2)});
    auto b = TensorElem::pure(A, {e(2, 2), e(2, 1)});
    CHECK(tensor_product_multiply(a, b) == TensorElem::pure(A, {e(1, 2), e(1, 1)}) * Scalar(1));
    auto c = TensorElem::pure(A, {e(2, 1), e(2, 2)});
    CHECK(tensor_product_multiply(a, c) == TensorElem::pure(A, {e(1, 1), e(1, 2)}) * Scalar(-1));
    CHECK(A->is_associative());
    CHECK(A->is_unit_valid());
  }
}
