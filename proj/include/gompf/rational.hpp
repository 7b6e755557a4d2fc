#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gompf {

using Integer = mpz_class;

// mpq_class keeps every arithmetic result in lowest terms with a positive
// denominator; only values built from a raw numerator/denominator pair need
// an explicit canonicalize(), which make_rational() does.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q" or "-p/q" with decimal digits only. Throws
/// std::invalid_argument on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer floor(const Rational& q);
bool is_integer(const Rational& q);

/// Representative of q modulo m in [0, m). m must be positive.
Rational reduce_mod(const Rational& q, const Rational& m);

RatVector to_rational(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);
bool is_zero(const IntVector& v);

}  // namespace gompf
