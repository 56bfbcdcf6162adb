#pragma once

#include <gmpxx.h>

#include <string>

#include "sohs/errors.hpp"

namespace sohs {

using Int = mpz_class;
using Rational = mpq_class;

// Bit length of |a|; 0 has height 1.
long height(const Int& a);

// height(p/q) = height(p) + height(q); height(0) = 1.
long height(const Rational& x);

int sign(const Rational& x);

// Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& x);

bool is_dyadic(const Rational& x);

// 2^e as a Rational; e may be negative.
Rational pow2(long e);

// x^e for e >= 0.
Rational pow_rational(const Rational& x, long e);

// floor(log2 |x|) for x != 0.
long floor_log2_abs(const Rational& x);

// Nearest value with denominator 2^bits; ties toward zero. |result - x| <= 2^-bits.
Rational round_dyadic(const Rational& x, unsigned bits);

// Truncate to `sig` significant bits (floating dyadic mantissa, toward zero).
Rational round_significand_toward_zero(const Rational& x, unsigned sig);

struct RatBounds {
  Rational lo, hi;
};

// lo <= sqrt(x) <= hi with hi - lo <= 2^-bits; exact (lo == hi) when x is a
// perfect rational square and the scaled integer root is exact.
RatBounds sqrt_enclosure(const Rational& x, unsigned bits);

// Lower approximation of sqrt(x) with ~sig significant bits, rounded toward zero.
Rational sqrt_round_down_sig(const Rational& x, unsigned sig);

// True iff x >= 0 is the square of a rational; the root (>= 0) is stored if asked.
bool is_perfect_square(const Rational& x, Rational* root = nullptr);

}  // namespace sohs
