#pragma once

#include <cstddef>
#include <vector>

#include "rbs/scalar.hpp"

namespace rbs {

// sigma[a-1] = sigma(a); values in 1..n.
using Permutation = std::vector<int>;
using DegreeSeq = std::vector<int>;

bool is_permutation(const Permutation& sigma);
Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // (sigma o tau)(a) = sigma(tau(a))
Permutation inverse(const Permutation& sigma);

// Sign of reordering x_1...x_n into x_sigma(1)...x_sigma(n) under graded commutativity.
int koszul_sign(const Permutation& sigma, const DegreeSeq& degs);
// sgn(sigma) * koszul_sign.
int chi_sign(const Permutation& sigma, const DegreeSeq& degs);
int permutation_sign(const Permutation& sigma);

Scalar koszul_epsilon(const Permutation& sigma, const DegreeSeq& degs);
Scalar koszul_chi(const Permutation& sigma, const DegreeSeq& degs);

// Degrees after reordering: result[a] = degs[sigma(a)].
DegreeSeq permute_degrees(const Permutation& sigma, const DegreeSeq& degs);

// Permutations increasing on each consecutive block, lexicographic order.
std::vector<Permutation> shuffles(const std::vector<int>& block_sizes);

// Unshuffles used by L-infinity identities: sigma(1)<...<sigma(i), sigma(i+1)<...<sigma(n).
std::vector<Permutation> unshuffles(int i, int n);

}  // namespace rbs
