#pragma once

#include "sohs/gram.hpp"
#include "sohs/poly.hpp"

namespace sohs {

// Solution of the Gram-matrix eigenvalue maximization for a trigonometric
// polynomial target: Q psd with theta_trace(Q, k) matching the coefficients
// of the target and the least eigenvalue as large as possible.
struct SdpSolution {
  GramMatrix Q_tilde;     // dyadic rational entries
  Rational lambda_tilde;  // certified: Q_tilde - lambda_tilde*I is psd
  Rational residual;      // exact bound on the worst coefficient mismatch
};

// Frobenius-norm validity radius: every psd Gram matrix of f has Frobenius
// norm at most sqrt(d+1) * f0.
Rational gram_radius(const TrigPoly& f);

// Requires f_eps positive on the unit circle.  The returned matrix satisfies
// Q_tilde >= 2^-delta * I (certified by exact factorizations) and reproduces
// every coefficient of f_eps within 2^-delta (exact rational recheck); its
// Frobenius norm is at most R.
SdpSolution solve_gram_sdp(const TrigPoly& f_eps, unsigned delta, const Rational& R,
                           bool verbose = false);

}  // namespace sohs
