#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace torifold {

// Arbitrary-precision scalars. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p/q" (q != 0) or "p" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 0, or "p" when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);

RatVector to_rational(const IntVector& v);

/// Smallest positive integer multiple of v that is integral and primitive
/// (positively proportional to v). Requires v != 0.
IntVector clear_denominators(const RatVector& v);

/// "(a, b, c)"
std::string format_vector(const RatVector& v);
std::string format_vector(const IntVector& v);

}  // namespace torifold
