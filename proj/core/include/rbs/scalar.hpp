#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rbs {

// Exact rational; mpq_class keeps lowest terms once canonicalized.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

// Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// (-1)^e for any integer e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline bool odd(long d) { return (d % 2) != 0; }

}  // namespace rbs
