#pragma once

// Hermitian Gram matrices of trig polynomials: f = v* Q v with
// v = (1, z, ..., z^d).  The coefficient of z^-k in v* Q v is the k-th
// subdiagonal sum of Q, which ties Gram matrices to TrigPoly coefficients.

#include "sohs/gaussian.hpp"
#include "sohs/poly.hpp"

namespace sohs {

bool is_hermitian(const GramMatrix& Q);

// Sum of the k-th subdiagonal (k >= 0): sum_i Q(i+k, i).
GaussianRational theta_trace(const GramMatrix& Q, int k);

// Expansion of v* Q v as a TrigPoly; Q must be Hermitian.
TrigPoly trig_from_gram(const GramMatrix& Q);

// Hermitian A + iB  ->  symmetric [[A, -B], [B, A]] (eigenvalues doubled).
Mat<Rational> real_embedding(const GramMatrix& Q);

// Largest lambda on a 2^-delta grid with Q - lambda I certified PSD by exact
// LDL*; starts from a Gershgorin lower bound, bisects against the smallest
// diagonal entry.  May be negative for indefinite Q.
Rational certified_min_eig_lb(const GramMatrix& Q, unsigned delta);

Rational frobenius_norm2(const GramMatrix& Q);

// Entrywise nearest-dyadic rounding at 2^-bits; real and imaginary parts
// round independently, so Hermitian structure survives.
GramMatrix round_dyadic(const GramMatrix& Q, unsigned bits);

// Shift every subdiagonal by a constant so that theta_trace(result, k) equals
// the z^-k coefficient of t for all k; the upper triangle is the conjugate
// mirror.  This is the nearest matrix to Q with the prescribed traces.
GramMatrix project_to_coefficients(const GramMatrix& Q, const TrigPoly& t);

}  // namespace sohs
