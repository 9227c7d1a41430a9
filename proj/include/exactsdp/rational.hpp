#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace exactsdp {

using Integer = mpz_class;

/// Arbitrary-precision rational scalar.  GMP keeps every value in canonical
/// reduced form: positive denominator and gcd(|num|, den) = 1 after each
/// arithmetic operation.
using Rational = mpq_class;

/// Encoding length in bits.
using BitSize = std::int64_t;

/// Builds a rational from a numerator/denominator pair and reduces it.
Rational make_rational(Integer num, Integer den);

/// Encoding length of a canonical rational p/q:
/// 1 + ceil(log2|p| + 1) + ceil(log2 q + 1), where the numerator term of a
/// zero value contributes 1, the same as |p| = 1.
BitSize bit_size(const Rational& x);

/// Encoding length of a vector: component sum plus the length.
BitSize bit_size(std::span<const Rational> v);

/// Exact floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);

/// Exact ceil(sqrt(n)) for n >= 0.
Integer isqrt_ceil(const Integer& n);

/// Smallest integer k with x <= 2^k, for x > 0.
long ceil_log2(const Rational& x);

/// Largest power of two <= x, for x > 0.
Rational pow2_floor(const Rational& x);

/// Rational upper bound on sqrt(s): returns u with
/// sqrt(s) <= u <= sqrt(s) * (1 + relerr).  Exact when s is a perfect
/// rational square.  Requires s >= 0 and 0 < relerr <= 1.
Rational sqrt_upper(const Rational& s, const Rational& relerr);

/// Rational lower bound on sqrt(s): sqrt(s) * (1 - relerr) <= l <= sqrt(s).
Rational sqrt_lower(const Rational& s, const Rational& relerr);

/// Canonical text form "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& x);

/// Strict parser for the canonical text form.  Accepts an optional leading
/// '-', a decimal integer, and an optional "/den" with den > 0; the result
/// is reduced.  Decimal points, exponents and whitespace are rejected so
/// that approximate inputs can never masquerade as exact ones.
Rational parse_rational(std::string_view text);

}  // namespace exactsdp
