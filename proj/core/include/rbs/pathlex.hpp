#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "rbs/operad_element.hpp"

namespace rbs {

// Position in the chain R1 < S1 < m2 < R2 < S2 < m3 < ...  Throws for labels outside {m,R,S}.
int pathlex_rank(const Generator& g);

// For each leaf (left to right) the word of generator ranks read from the root down to it.
std::vector<std::vector<int>> path_sequence(const TreeMonomial& t);

// Arity, then total degree, then leaf words under length-lex, then token order as a final tie-break.
std::strong_ordering compare_graded_pathlex(const TreeMonomial& a, const TreeMonomial& b);

// Maximal monomial and its coefficient.  Throws on the zero element.
std::pair<TreeMonomial, Scalar> leading_monomial(const OperadElement& e);

}  // namespace rbs
