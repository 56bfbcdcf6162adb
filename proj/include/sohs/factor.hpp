#pragma once

// Matrix factorizations over Gaussian rationals: exact pivoted LDL* (the PSD
// decision procedure and source of weighted squares) and finite-precision
// Cholesky (squares for the compensation identity).

#include <optional>
#include <vector>

#include "sohs/gaussian.hpp"
#include "sohs/poly.hpp"

namespace sohs {

struct LdltFactor {
  Mat<GaussianRational> L;   // unit lower triangular
  std::vector<Rational> D;   // pivots
  std::vector<int> perm;     // Q(perm[i], perm[j]) = (L D L*)(i, j)
};

// Exact LDL* with symmetric largest-diagonal pivoting.  Returns nullopt when
// Q is not PSD (negative pivot, or a zero pivot with nonzero residual row).
// All pivots strictly positive certifies Q positive definite.
std::optional<LdltFactor> ldlt_exact(const GramMatrix& Q);

GramMatrix ldlt_reconstruct(const LdltFactor& F);

// Weighted squares: v* Q v = sum_k D_k s_k s_k* with
// s_k(z) = sum_j conj(L(j,k)) z^perm[j].
std::vector<ComplexPoly> ldlt_squares(const LdltFactor& F);

// Pivot-safety condition 2^-delta_c < lambda / (d^2 + d + (d-1) lambda) for
// running the finite-precision Cholesky on a (d+1)x(d+1) matrix with
// lambda_min >= lambda.
bool cholesky_pivot_condition(const Rational& lambda_lb, int d, unsigned delta_c);

// Cholesky factorization with every computed entry truncated toward zero to
// delta_c significant bits; returns the polynomials s_k(z) = sum_j
// conj(L(j,k)) z^j, so that sum_k s_k s_k* approximates v* Q v.  Throws
// PivotNonpositive when a pivot degenerates (delta_c too small for the
// matrix's eigenvalue margin).
std::vector<ComplexPoly> cholesky_approx(const GramMatrix& Q, const Rational& lambda_lb,
                                         unsigned delta_c);

}  // namespace sohs
