#include "sohs/factor.hpp"

#include <algorithm>

#include "sohs/errors.hpp"

namespace sohs {

std::optional<LdltFactor> ldlt_exact(const GramMatrix& Q) {
  const int n = static_cast<int>(Q.rows());
  GramMatrix A = Q;
  LdltFactor F;
  F.L = Mat<GaussianRational>::Constant(n, n, GaussianRational(0));
  F.D.assign(n, Rational(0));
  F.perm.resize(n);
  for (int i = 0; i < n; ++i) {
    F.perm[i] = i;
    F.L(i, i) = GaussianRational(1);
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (A(i, i).re > A(piv, piv).re) piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
      for (int i = 0; i < n; ++i) std::swap(A(i, piv), A(i, k));
      for (int j = 0; j < k; ++j) std::swap(F.L(piv, j), F.L(k, j));
      std::swap(F.perm[piv], F.perm[k]);
    }
    Rational p = A(k, k).re;
    if (p < 0) return std::nullopt;
    if (p == 0) {
      for (int i = k + 1; i < n; ++i)
        if (!A(i, k).is_zero()) return std::nullopt;
      F.D[k] = 0;
      continue;
    }
    F.D[k] = p;
    for (int i = k + 1; i < n; ++i) F.L(i, k) = A(i, k) / GaussianRational(p);
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) A(i, j) -= F.L(i, k) * conj(F.L(j, k)) * GaussianRational(p);
  }
  return F;
}

GramMatrix ldlt_reconstruct(const LdltFactor& F) {
  const int n = static_cast<int>(F.D.size());
  GramMatrix R = GramMatrix::Constant(n, n, GaussianRational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GaussianRational s(0);
      for (int k = 0; k < n; ++k)
        s += F.L(i, k) * conj(F.L(j, k)) * GaussianRational(F.D[k]);
      R(F.perm[i], F.perm[j]) = s;
    }
  return R;
}

std::vector<ComplexPoly> ldlt_squares(const LdltFactor& F) {
  const int n = static_cast<int>(F.D.size());
  std::vector<ComplexPoly> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    ComplexPoly s;
    s.c.assign(n, GaussianRational(0));
    for (int j = 0; j < n; ++j) s.c[F.perm[j]] = conj(F.L(j, k));
    s.trim();
    out.push_back(std::move(s));
  }
  return out;
}

bool cholesky_pivot_condition(const Rational& lambda_lb, int d, unsigned delta_c) {
  if (lambda_lb <= 0) return false;
  Rational denom = Rational(d) * d + d + Rational(d - 1) * lambda_lb;
  if (denom <= 0) return true;  // d = 0: any positive lambda works
  return pow2(-static_cast<long>(delta_c)) < lambda_lb / denom;
}

std::vector<ComplexPoly> cholesky_approx(const GramMatrix& Q, const Rational& lambda_lb,
                                         unsigned delta_c) {
  const int n = static_cast<int>(Q.rows());
  if (!cholesky_pivot_condition(lambda_lb, n - 1, delta_c))
    throw PivotNonpositive("precision too coarse for the eigenvalue margin");
  Mat<GaussianRational> L = Mat<GaussianRational>::Constant(n, n, GaussianRational(0));
  for (int k = 0; k < n; ++k) {
    Rational p = Q(k, k).re;
    for (int j = 0; j < k; ++j) p -= abs2(L(k, j));
    if (p <= 0) throw PivotNonpositive("nonpositive pivot");
    Rational root = sqrt_round_down_sig(p, delta_c);
    L(k, k) = GaussianRational(root);
    for (int i = k + 1; i < n; ++i) {
      GaussianRational v = Q(i, k);
      for (int j = 0; j < k; ++j) v -= L(i, j) * conj(L(k, j));
      v = v / GaussianRational(root);
      L(i, k) = {round_significand_toward_zero(v.re, delta_c),
                 round_significand_toward_zero(v.im, delta_c)};
    }
  }
  std::vector<ComplexPoly> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    ComplexPoly s;
    s.c.assign(n, GaussianRational(0));
    for (int j = 0; j < n; ++j) s.c[j] = conj(L(j, k));
    s.trim();
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sohs
