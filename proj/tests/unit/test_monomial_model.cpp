#include <doctest.h>

#include <algorithm>

#include "rbs/monomial_model.hpp"

using namespace rbs;

namespace {

TreeMonomial T(const char* s) { return TreeMonomial::parse(s); }
OperadElement E(const char* s) { return OperadElement::parse(s); }

const char* kT2 = "R2(1, m4(R3(m2(R1(m2(2, 3)), 4), 5, R3(m2(R1(6), 7), 8, 9)), 10, 11, 12))";
const char* kT3 = "m2(1, m4(R3(m2(R1(m3(2, 3, 4)), 5), 6, R3(m2(R1(7), 8), 9, 10)), 11, 12, 13))";

}  // namespace

TEST_SUITE("monomial_model") {
  TEST_CASE("simplified differential") {
    CHECK(diff_bar(Generator::m(3)) == E("-m2(m2(1, 2), 3)"));
    CHECK(diff_bar(Generator::R(1)).is_zero());
    CHECK(diff_bar(Generator::R(2)) == E("R1(m2(R1(1), 2))"));
    CHECK(diff_bar(Generator::S(2)) == E("S1(m2(R1(1), 2))"));
    // square zero on generators
    for (int n = 1; n <= 6; ++n)
      for (char f : {'m', 'R', 'S'}) {
        if (f == 'm' && n < 2) continue;
        CHECK(apply_diff_bar(diff_bar(Generator::builtin(f, n))).is_zero());
      }
  }

  TEST_CASE("effective divisors") {
    auto e = is_effective(T("m2(m2(1, 2), 3)"));
    REQUIRE(e);
    CHECK(e->root_pos == 0);
    CHECK(e->leaf == 1);
    CHECK(e->generator == Generator::m(3));
    CHECK_FALSE(is_effective(T(kT2)));
    CHECK_FALSE(is_effective(T(kT3)));
    CHECK_FALSE(is_effective(T("m3(1, 2, 3)")));
  }

  TEST_CASE("homotopy on small trees") {
    CHECK(homotopy_H(T(kT2)).is_zero());
    CHECK(homotopy_H(T("m2(m2(1, 2), 3)")) == E("-m3(1, 2, 3)"));
    CHECK(homotopy_H(T("R1(m2(R1(1), 2))")) == E("R2(1, 2)"));
    CHECK(homotopy_H(T("R2(1, 2)")).is_zero());
    CHECK(homotopy_H(apply_diff_bar(E("R2(1, 2)"))) == E("R2(1, 2)"));
    CHECK(homotopy_H(apply_diff_bar(E("m3(1, 2, 3)"))) == E("m3(1, 2, 3)"));
  }

  TEST_CASE("leading coefficients are units") {
    for (int n = 1; n <= 6; ++n)
      for (char f : {'m', 'R', 'S'}) {
        if (n < (f == 'm' ? 3 : 2)) continue;
        auto c = leading_coefficient(Generator::builtin(f, n));
        CHECK(abs(c) == 1);
      }
  }

  TEST_CASE("contraction on a small range") {
    auto r = check_homotopy(3, 3);
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(r.checked < r.enumerated);
  }

  TEST_CASE("enumeration") {
    auto ts = enumerate_monomials(2, 2);
    // weight 1: m2 R1 R2 S1 S2; weight 2 with arity <= 2: X1 o X1 (4), m2/X2 with a unary on a slot
    for (const auto& t : ts) {
      CHECK(t.arity() <= 2);
      CHECK(t.weight() >= 1);
      CHECK(t.weight() <= 2);
    }
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
  }

  TEST_CASE("normal forms") {
    CHECK(is_mrbs_normal(T("m2(1, m2(2, 3))")));
    CHECK_FALSE(is_mrbs_normal(T("m2(m2(1, 2), 3)")));
    CHECK_FALSE(is_mrbs_normal(T("R1(m2(R1(1), 2))")));
  }
}
