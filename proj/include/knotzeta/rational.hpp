#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace knotzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b" or "a" (optional sign). Throws InputError on malformed text or b == 0.
Rational parse_rational(std::string_view text);

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }

}  // namespace knotzeta
