#pragma once

// Approximate all 2d complex roots of g(z) = z^d f(z) for a trig polynomial f
// positive on the circle, and match them into reciprocal-conjugate pairs
// (alpha, beta) with beta ~ 1/conj(alpha).

#include <cstdint>
#include <utility>
#include <vector>

#include "sohs/poly.hpp"
#include "sohs/rational.hpp"

namespace sohs {

struct RootSet {
  std::vector<GaussianRational> roots;      // 2d approximations
  std::vector<std::pair<int, int>> pairing; // (primary, partner); primary has
                                            // the larger modulus
  unsigned precision = 0;                   // delta the set was produced for

  std::vector<GaussianRational> primaries() const {
    std::vector<GaussianRational> p;
    p.reserve(pairing.size());
    for (auto [j, k] : pairing) p.push_back(roots[j]);
    return p;
  }
};

// Coefficients of z^d f(z), constant term first.
ComplexPoly circle_numerator(const TrigPoly& f);

// Rational lower bound on the minimal distance between distinct roots:
// sqrt(3) * d^(-d/2-1) * |g|_2^(1-d), rounded downward; 0 when deg(g) <= 1.
// Scaling g does not change the true separation, so g is normalized to
// Gaussian-integer coefficients first.
Rational separation_lower_bound(const ComplexPoly& g);

// Greedy reciprocal-conjugate matching; throws PairingFailed when the best
// match for some root misses 1/conj(root) by more than 2^(-delta/2).
std::vector<std::pair<int, int>> pair_reciprocal(
    const std::vector<GaussianRational>& roots, unsigned delta);

// Aberth-Ehrlich iteration at doubling working precision until every
// approximation satisfies the residual bound
//   |g(root)|^2 <= 2^(2-2delta) |g|_2^2 max(1, |root|^2)^(2d)
// (checked exactly) and the pairing succeeds.  Requires f positive on the
// circle.  Throws PrecisionExhausted past max_bits working precision.
RootSet complex_roots(const TrigPoly& f_eps, unsigned delta, std::uint64_t seed = 1,
                      unsigned max_bits = 1u << 20);

}  // namespace sohs
