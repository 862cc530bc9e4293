#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lglab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal form "n" or "n/d" with d > 0 and the fraction reduced.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "n", "-n", "n/d"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace lglab
