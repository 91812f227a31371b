#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace sqck {

// Exact arbitrary-precision rational scalar. GMP keeps values in lowest
// terms with a positive denominator, which is exactly the invariant the
// rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// mpq_class(num, den) does not reduce the fraction; GMP arithmetic assumes
// canonical operands, so always build ratios through this helper.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q" or "p"; returns nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Lowest-terms "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace sqck
