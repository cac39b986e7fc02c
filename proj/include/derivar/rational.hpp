#pragma once

#include <gmpxx.h>

#include <string>

namespace derivar {

// Exact rational scalar. GMP keeps gcd(|num|, den) = 1 and den > 0 across
// arithmetic; only raw string / integer-pair construction needs an explicit
// canonicalize, which the helpers below take care of.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "n" or "n/d" (d > 0). Throws std::invalid_argument on anything else.
Rational rat_from_string(const std::string& s);

std::string rat_to_string(const Rational& r);

/// Binomial coefficient with the usual convention C(n,k) = 0 for k < 0,
/// n < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace derivar
