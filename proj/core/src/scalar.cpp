#include "rbs/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace rbs {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  std::size_t slash = t.find('/');
  auto digits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t i = a; i < b; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, t.size())
                                       : digits(start, slash) && digits(slash + 1, t.size());
  if (!ok) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (t[0] == '+') t.erase(0, 1);
  Scalar s;
  if (s.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (s.get_den() == 0) throw std::invalid_argument("zero denominator");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace rbs
