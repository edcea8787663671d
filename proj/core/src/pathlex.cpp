#include "rbs/pathlex.hpp"

#include <stdexcept>

namespace rbs {

int pathlex_rank(const Generator& g) {
  switch (g.family) {
    case 'R': if (g.arity >= 1) return 3 * g.arity - 3; break;
    case 'S': if (g.arity >= 1) return 3 * g.arity - 2; break;
    case 'm': if (g.arity >= 2) return 3 * g.arity - 4; break;
    default: break;
  }
  throw std::invalid_argument("label outside the m/R/S alphabet: " + g.name());
}

std::vector<std::vector<int>> path_sequence(const TreeMonomial& t) {
  std::vector<std::vector<int>> words;
  std::vector<int> path;
  std::vector<int> remaining;
  for (auto tok : t.tokens()) {
    if (tok == TreeMonomial::kLeaf) {
      words.push_back(path);
      while (!remaining.empty() && --remaining.back() == 0) {
        remaining.pop_back();
        path.pop_back();
      }
    } else {
      Generator g = TreeMonomial::decode(tok);
      path.push_back(pathlex_rank(g));
      remaining.push_back(g.arity);
    }
  }
  return words;
}

std::strong_ordering compare_graded_pathlex(const TreeMonomial& a, const TreeMonomial& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto pa = path_sequence(a), pb = path_sequence(b);
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (auto c = pa[k].size() <=> pb[k].size(); c != 0) return c;
    if (auto c = pa[k] <=> pb[k]; c != 0) return c;
  }
  return a <=> b;
}

std::pair<TreeMonomial, Scalar> leading_monomial(const OperadElement& e) {
  if (e.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  const std::pair<const TreeMonomial, Scalar>* best = nullptr;
  for (const auto& term : e.terms())
    if (!best || compare_graded_pathlex(term.first, best->first) > 0) best = &term;
  return {best->first, best->second};
}

}  // namespace rbs
