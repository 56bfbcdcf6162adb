#include "sohs/gram.hpp"

#include <algorithm>

#include "sohs/factor.hpp"

namespace sohs {

bool is_hermitian(const GramMatrix& Q) {
  if (Q.rows() != Q.cols()) return false;
  for (int i = 0; i < Q.rows(); ++i) {
    if (Q(i, i).im != 0) return false;
    for (int j = i + 1; j < Q.cols(); ++j)
      if (Q(i, j) != conj(Q(j, i))) return false;
  }
  return true;
}

GaussianRational theta_trace(const GramMatrix& Q, int k) {
  GaussianRational s(0);
  for (int i = 0; i + k < Q.rows(); ++i) s += Q(i + k, i);
  return s;
}

TrigPoly trig_from_gram(const GramMatrix& Q) {
  TrigPoly f;
  int n = static_cast<int>(Q.rows());
  f.f0 = theta_trace(Q, 0).real();
  f.c.reserve(n - 1);
  for (int k = 1; k < n; ++k) f.c.push_back(theta_trace(Q, k));
  f.trim();
  return f;
}

Mat<Rational> real_embedding(const GramMatrix& Q) {
  int n = static_cast<int>(Q.rows());
  Mat<Rational> M(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M(i, j) = Q(i, j).re;
      M(n + i, n + j) = Q(i, j).re;
      M(i, n + j) = -Q(i, j).im;
      M(n + i, j) = Q(i, j).im;
    }
  return M;
}

Rational frobenius_norm2(const GramMatrix& Q) {
  Rational s(0);
  for (int i = 0; i < Q.rows(); ++i)
    for (int j = 0; j < Q.cols(); ++j) s += abs2(Q(i, j));
  return s;
}

Rational certified_min_eig_lb(const GramMatrix& Q, unsigned delta) {
  int n = static_cast<int>(Q.rows());
  if (n == 0) return 0;
  // Gershgorin with |q| <= |re q| + |im q|: eigenvalues >= lo; lambda_min <= hi
  Rational lo, hi;
  for (int i = 0; i < n; ++i) {
    Rational radius(0);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      radius += abs(Q(i, j).re) + abs(Q(i, j).im);
    }
    Rational row_lo = Q(i, i).re - radius;
    if (i == 0 || row_lo < lo) lo = row_lo;
    if (i == 0 || Q(i, i).re < hi) hi = Q(i, i).re;
  }
  auto psd_at = [&](const Rational& t) {
    GramMatrix S = Q;
    for (int i = 0; i < n; ++i) S(i, i) -= GaussianRational(t);
    return ldlt_exact(S).has_value();
  };
  Rational step = pow2(-static_cast<long>(delta));
  while (hi - lo > step) {
    Rational mid = (lo + hi) / 2;
    if (psd_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  // make the returned bound itself LDL*-certified even if no midpoint passed
  while (!psd_at(lo)) lo -= step;
  return lo;
}

GramMatrix round_dyadic(const GramMatrix& Q, unsigned bits) {
  GramMatrix R(Q.rows(), Q.cols());
  for (Eigen::Index i = 0; i < Q.rows(); ++i)
    for (Eigen::Index j = 0; j < Q.cols(); ++j)
      R(i, j) = GaussianRational(round_dyadic(Q(i, j).re, bits),
                                 round_dyadic(Q(i, j).im, bits));
  return R;
}

GramMatrix project_to_coefficients(const GramMatrix& Q, const TrigPoly& t) {
  const int n = static_cast<int>(Q.rows());
  GramMatrix P = Q;
  for (int k = 0; k < n; ++k) {
    GaussianRational excess =
        (theta_trace(P, k) - t.coeff(-k)) / GaussianRational(n - k);
    for (int j = k; j < n; ++j) {
      P(j, j - k) -= excess;
      if (k > 0) P(j - k, j) = conj(P(j, j - k));
    }
  }
  return P;
}

}  // namespace sohs
