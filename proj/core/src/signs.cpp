#include "rbs/signs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rbs {

bool is_permutation(const Permutation& sigma) {
  std::vector<char> seen(sigma.size() + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r(sigma.size());
  for (std::size_t a = 0; a < tau.size(); ++a) r[a] = sigma[tau[a] - 1];
  return r;
}

Permutation inverse(const Permutation& sigma) {
  Permutation r(sigma.size());
  for (std::size_t a = 0; a < sigma.size(); ++a) r[sigma[a] - 1] = static_cast<int>(a) + 1;
  return r;
}

static void check_args(const Permutation& sigma, const DegreeSeq& degs) {
  if (sigma.size() != degs.size()) throw std::invalid_argument("koszul: length mismatch");
  if (!is_permutation(sigma)) throw std::invalid_argument("koszul: not a permutation");
}

int koszul_sign(const Permutation& sigma, const DegreeSeq& degs) {
  check_args(sigma, degs);
  int s = 1;
  const std::size_t n = sigma.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (sigma[a] > sigma[b] && odd(degs[sigma[a] - 1]) && odd(degs[sigma[b] - 1])) s = -s;
  return s;
}

int permutation_sign(const Permutation& sigma) {
  int s = 1;
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) s = -s;
  return s;
}

int chi_sign(const Permutation& sigma, const DegreeSeq& degs) {
  return permutation_sign(sigma) * koszul_sign(sigma, degs);
}

Scalar koszul_epsilon(const Permutation& sigma, const DegreeSeq& degs) {
  return Scalar(koszul_sign(sigma, degs));
}

Scalar koszul_chi(const Permutation& sigma, const DegreeSeq& degs) {
  return Scalar(chi_sign(sigma, degs));
}

DegreeSeq permute_degrees(const Permutation& sigma, const DegreeSeq& degs) {
  check_args(sigma, degs);
  DegreeSeq r(degs.size());
  for (std::size_t a = 0; a < sigma.size(); ++a) r[a] = degs[sigma[a] - 1];
  return r;
}

std::vector<Permutation> shuffles(const std::vector<int>& block_sizes) {
  int n = 0;
  for (int b : block_sizes) {
    if (b < 0) throw std::invalid_argument("shuffles: negative block");
    n += b;
  }
  // A shuffle is determined by the block label of each output value; enumerate label words.
  std::vector<int> labels;
  for (std::size_t k = 0; k < block_sizes.size(); ++k)
    labels.insert(labels.end(), block_sizes[k], static_cast<int>(k));
  std::vector<Permutation> out;
  std::vector<int> word = labels;  // sorted ascending already
  do {
    // word[v-1] = block receiving value v; block k takes its values in increasing order.
    std::vector<int> next(block_sizes.size(), 0), start(block_sizes.size(), 0);
    for (std::size_t k = 1; k < block_sizes.size(); ++k) start[k] = start[k - 1] + block_sizes[k - 1];
    Permutation p(n);
    for (int v = 1; v <= n; ++v) {
      int k = word[v - 1];
      p[start[k] + next[k]++] = v;
    }
    out.push_back(std::move(p));
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> unshuffles(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("unshuffles: bad split");
  return shuffles({i, n - i});
}

}  // namespace rbs
