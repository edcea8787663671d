#include <doctest.h>

#include "rbs/operad_element.hpp"
#include "rbs/pathlex.hpp"
#include "rbs/monomial_model.hpp"

using namespace rbs;

namespace {

TreeMonomial T(const char* s) { return TreeMonomial::parse(s); }
OperadElement E(const char* s) { return OperadElement::parse(s); }
OperadElement G(const Generator& g) { return OperadElement::generator(g); }

}  // namespace

TEST_SUITE("tree_operad") {
  TEST_CASE("parse and print round trip") {
    auto t = T("m2(R1(1), m2(2, 3))");
    CHECK(t.to_string() == "m2(R1(1), m2(2, 3))");
    CHECK(t.arity() == 3);
    CHECK(t.degree() == 0);
    CHECK(t.weight() == 3);
    CHECK(T("R3(1, 2, 3)").degree() == 2);
    CHECK(T("f2^-1(1, 2)").degree() == -1);
    CHECK_THROWS(T("m2(1)"));
    CHECK_THROWS(T("m2(1, 3)"));
  }

  TEST_CASE("compose_at examples") {
    auto a = compose_at(G(Generator::m(2)), 1, G(Generator::m(2)));
    CHECK(a == E("m2(m2(1, 2), 3)"));

    auto b = compose_at(G(Generator::m(2)), 2, G(Generator::R(2)));
    CHECK(b == E("m2(1, R2(2, 3))"));

    // (m2, R2, S2) reordered to planar (m2, S2, R2) swaps two odd vertices
    auto c = compose_at(E("m2(1, R2(2, 3))"), 1, G(Generator::S(2)));
    CHECK(c == E("-m2(S2(1, 2), R2(3, 4))"));
  }

  TEST_CASE("sequential composition agrees with simultaneous grafting") {
    const char* fs[] = {"m2(R2(1, 2), 3)", "R3(1, S1(2), 3)", "m3(R1(1), 2, S2(3, 4))"};
    const char* gs[] = {"S2(1, 2)", "R1(m2(1, 2))", "m2(1, R2(2, 3))"};
    for (const char* fs_ : fs)
      for (const char* g1 : gs)
        for (const char* g2 : gs) {
          auto f = E(fs_);
          const int n = *f.arity();
          auto a1 = E(g1), a2 = E(g2);
          std::vector<const OperadElement*> args(n, nullptr);
          args[0] = &a1;
          args[n - 1] = &a2;
          // left slot first; the right slot then sits at leaf n + arity(a1) - 1
          auto seq = compose_at(compose_at(f, 1, a1), n + *a1.arity() - 1, a2);
          // the other order passes a2 over a1
          auto rev = compose_at(compose_at(f, n, a2), 1, a1);
          CHECK(rev == seq * Scalar(sign_pow(static_cast<long>(*a1.degree()) * *a2.degree())));
          CHECK(full_compose(f, args) == seq);
        }
  }

  TEST_CASE("brace") {
    auto m2 = G(Generator::m(2));
    CHECK(brace(m2, {}) == m2);
    CHECK(brace(m2, {m2, m2, m2}).is_zero());
    auto x3 = G(Generator::x(3)), x2 = G(Generator::x(2));
    auto b = brace(x3, {x2});
    CHECK(b.size() == 3);
    OperadElement manual;
    for (int i = 1; i <= 3; ++i) manual += compose_at(x3, i, x2);
    CHECK(b == manual);
    CHECK(pre_jacobi_defect(x3, x2, x2).is_zero());
  }

  TEST_CASE("pre-Jacobi on mixed generators") {
    std::vector<OperadElement> gens;
    for (char f : {'x', 'y', 'z', 'm', 'R', 'S'})
      for (int n = 1; n <= 3; ++n)
        if (f != 'm' || n >= 2) gens.push_back(G(Generator::builtin(f, n)));
    for (const auto& f : gens)
      for (const auto& g : gens)
        for (const auto& h : gens) REQUIRE(pre_jacobi_defect(f, g, h).is_zero());
  }

  TEST_CASE("element arithmetic") {
    auto e = E("2*m2(m2(1, 2), 3) - m2(1, m2(2, 3))");
    CHECK(e.size() == 2);
    CHECK(e.coefficient(T("m2(m2(1, 2), 3)")) == 2);
    CHECK((e - e).is_zero());
    CHECK(E("1/2*R1(1)") * Scalar(2) == E("R1(1)"));
    CHECK(*E("m2(1, R2(2, 3)) + R1(m3(1, 2, 3))").degree() == 1);
    CHECK_THROWS(E("m2(1, 2) + R1(1)").arity());
    CHECK_THROWS(E("3*"));
  }

  TEST_CASE("graded path-lex order") {
    CHECK(compare_graded_pathlex(T("m3(1, 2, 3)"), T("R2(1, 2)")) == std::strong_ordering::greater);
    CHECK(compare_graded_pathlex(T("R2(1, 2)"), T("m2(1, 2)")) == std::strong_ordering::greater);
    CHECK(compare_graded_pathlex(T("S1(1)"), T("R1(1)")) == std::strong_ordering::greater);
    CHECK(compare_graded_pathlex(T("m2(1, 2)"), T("m2(1, 2)")) == std::strong_ordering::equal);

    CHECK(leading_monomial(diff_bar(Generator::m(3))).first == T("m2(m2(1, 2), 3)"));
    CHECK(leading_monomial(diff_bar(Generator::R(2))).first == T("R1(m2(R1(1), 2))"));
    auto single = E("-3*R2(m2(1, 2), 3)");
    CHECK(leading_monomial(single).first == T("R2(m2(1, 2), 3)"));
    CHECK(leading_monomial(single).second == -3);
    CHECK_THROWS(leading_monomial(OperadElement{}));
  }
}
