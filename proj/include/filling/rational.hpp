#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace filling {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" text form: q > 0, gcd(p, q) = 1, denominator always present.
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p"; the result is canonicalized.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace filling
