#ifndef NILREP_RATIONAL_HPP
#define NILREP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilrep {

/// Arbitrary precision fraction; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and finite decimals such as "-1.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace nilrep

#endif
