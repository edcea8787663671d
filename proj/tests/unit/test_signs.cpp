#include <doctest.h>

#include <algorithm>
#include <random>

#include "rbs/signs.hpp"

using namespace rbs;

namespace {

// Bubble-sorts sigma back to the identity, flipping once per adjacent swap of two odd entries.
int adjacent_swap_oracle(Permutation sigma, const DegreeSeq& degs) {
  int s = 1;
  for (std::size_t pass = 0; pass < sigma.size(); ++pass)
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
      if (sigma[i] > sigma[i + 1]) {
        if (degs[sigma[i] - 1] % 2 != 0 && degs[sigma[i + 1] - 1] % 2 != 0) s = -s;
        std::swap(sigma[i], sigma[i + 1]);
      }
  return s;
}

}  // namespace

TEST_SUITE("signs") {
  TEST_CASE("koszul epsilon basics") {
    CHECK(koszul_epsilon({1, 2, 3}, {1, 1, 1}) == 1);
    CHECK(koszul_epsilon({2, 1}, {1, 1}) == -1);
    CHECK(koszul_epsilon({2, 1}, {0, 1}) == 1);
  }

  TEST_CASE("three-cycle agrees with adjacent swaps") {
    Permutation cyc{2, 3, 1};
    DegreeSeq degs{1, 1, 0};
    CHECK(koszul_sign(cyc, degs) == adjacent_swap_oracle(cyc, degs));
    CHECK(koszul_sign(cyc, degs) == -1);
  }

  TEST_CASE("koszul chi") {
    CHECK(koszul_chi({1, 2}, {0, 0}) == 1);
    CHECK(koszul_chi({2, 1}, {0, 0}) == -1);
    CHECK(koszul_chi({2, 1}, {1, 1}) == 1);
  }

  TEST_CASE("random permutations match the swap oracle and are multiplicative") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + static_cast<int>(rng() % 6);
      Permutation s = identity_permutation(n), u = identity_permutation(n);
      std::shuffle(s.begin(), s.end(), rng);
      std::shuffle(u.begin(), u.end(), rng);
      DegreeSeq d(n);
      for (auto& x : d) x = static_cast<int>(rng() % 5) - 2;
      REQUIRE(koszul_sign(s, d) == adjacent_swap_oracle(s, d));
      // reorder by s, then by u acting on the reordered list
      CHECK(koszul_sign(compose(s, u), d) == koszul_sign(s, d) * koszul_sign(u, permute_degrees(s, d)));
      CHECK(permutation_sign(compose(s, u)) == permutation_sign(s) * permutation_sign(u));
      CHECK(compose(s, inverse(s)) == identity_permutation(n));
    }
  }

  TEST_CASE("shuffles") {
    CHECK(shuffles({1, 1}).size() == 2);
    CHECK(shuffles({3, 0}) == std::vector<Permutation>{{1, 2, 3}});
    CHECK(shuffles({0, 0}).size() == 1);

    // filter all of S_3 for increasing blocks (2, 1)
    Permutation p{1, 2, 3};
    std::vector<Permutation> expect;
    do {
      if (p[0] < p[1]) expect.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(shuffles({2, 1}) == expect);
    CHECK(expect.size() == 3);

    CHECK(shuffles({2, 2, 1}).size() == 30);
    CHECK(unshuffles(2, 4).size() == 6);
    for (const auto& s : shuffles({2, 3})) CHECK(is_permutation(s));
  }

  TEST_CASE("rejects non-permutations") {
    CHECK_FALSE(is_permutation({1, 1}));
    CHECK_FALSE(is_permutation({0, 1}));
    CHECK_THROWS(koszul_sign({1, 1}, {0, 0}));
  }
}
