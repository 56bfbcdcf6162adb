#pragma once

#include <vector>

#include "sohs/gaussian.hpp"

namespace sohs {

// Dense primal-dual interior-point solver for small block-diagonal
// semidefinite programs with optional free variables:
//
//   minimize    objective . X
//   subject to  lhs_j . X + <free_coeffs_j, y> = rhs_j,   j = 0..m-1
//               X psd (block diagonal),  y free.
//
// Data matrices are symmetric and given sparsely: an entry with row > col
// stands for the symmetric pair, so it contributes twice to inner products.

struct SdpEntry {
  int block;
  int row, col;  // row >= col
  Rational value;
};

struct SdpConstraint {
  std::vector<SdpEntry> lhs;
  std::vector<Rational> free_coeffs;  // empty, or one per free variable
  Rational rhs;
};

struct SdpProblemData {
  std::vector<int> block_sizes;
  int n_free = 0;
  std::vector<SdpEntry> objective;
  std::vector<SdpConstraint> constraints;
};

struct SdpResult {
  std::vector<Mat<Rational>> X;  // dyadic entries, one matrix per block
  std::vector<Rational> free_values;
  Rational gap;           // duality gap of the final float iterate
  Rational max_residual;  // sup-norm equality residual of that iterate
  int iterations = 0;
  int precision_level = 0;  // 0 = double, then escalating software floats
};

// Iterates until the duality gap and the equality residuals drop below
// 2^-tol_bits, escalating the working precision as needed.  The returned
// matrices are rounded to round_bits fractional bits.
SdpResult solve_sdp(const SdpProblemData& prob, unsigned tol_bits,
                    unsigned round_bits, bool verbose = false);

}  // namespace sohs
