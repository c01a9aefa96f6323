#pragma once

// Arbitrary-precision integers and rationals. Everything numeric in the
// library is expressed in these two types.
//
// Note: gmpxx arithmetic returns expression templates. Bind results to an
// explicit ExactInt / ExactRational, never to `auto`.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace k3g {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// floor(a / b) for b > 0.
ExactInt floor_div(const ExactInt& a, const ExactInt& b);

/// ceil(a / b) for b > 0.
ExactInt ceil_div(const ExactInt& a, const ExactInt& b);

/// floor(sqrt(n)) by Newton iteration, n >= 0.
ExactInt isqrt(const ExactInt& n);

/// s with s*s == n when n is a perfect square.
std::optional<ExactInt> exact_sqrt(const ExactInt& n);

/// num/den in lowest terms with positive denominator. Throws on den == 0.
ExactRational make_rational(const ExactInt& num, const ExactInt& den = 1);

ExactInt parse_int(std::string_view text);

/// Accepts "n", "-n", "n/d".
ExactRational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const ExactRational& q);
std::string to_string(const ExactInt& n);

/// Fraction rendering for terminal tables (Unicode minus and fraction slash).
std::string to_unicode(const ExactRational& q);

bool fits_int64(const ExactInt& n);

}  // namespace k3g
