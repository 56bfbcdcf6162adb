#include "sohs/gram_sdp.hpp"

#include <utility>

#include "sohs/errors.hpp"
#include "sohs/sdp.hpp"

namespace sohs {

Rational gram_radius(const TrigPoly& f) {
  long n = f.degree() + 1;
  return sqrt_enclosure(Rational(n), 8).hi * f.f0;
}

// The complex problem is solved over its real symmetric embedding
// [[A, -B], [B, A]], with the eigenvalue variable folded in as
// Q = Q' + lambda*I (Q' psd, lambda a 1x1 psd block).  Each Hermitian trace
// constraint doubles: the embedding carries two copies of Q'.
SdpSolution solve_gram_sdp(const TrigPoly& f_eps, unsigned delta, const Rational& R,
                           bool verbose) {
  const int d = f_eps.degree();
  const int n = d + 1;
  if (f_eps.f0 <= 0) throw Infeasible("trace of a psd Gram matrix is its constant term");

  if (d == 0) {
    if (f_eps.f0 < pow2(-static_cast<long>(delta)))
      throw SolverStalled("eigenvalue margin below the requested resolution");
    GramMatrix Q(1, 1);
    Q(0, 0) = GaussianRational(f_eps.f0);
    if (frobenius_norm2(Q) > R * R) throw SolverStalled("Frobenius radius exceeded");
    return {Q, f_eps.f0, Rational(0)};
  }

  SdpProblemData prob;
  prob.block_sizes = {2 * n, 1};
  prob.objective.push_back({1, 0, 0, Rational(-1)});  // maximize lambda
  {
    SdpConstraint c0;
    for (int i = 0; i < 2 * n; ++i) c0.lhs.push_back({0, i, i, Rational(1)});
    c0.lhs.push_back({1, 0, 0, Rational(2 * n)});
    c0.rhs = 2 * f_eps.f0;
    prob.constraints.push_back(std::move(c0));
  }
  const Rational half(1, 2);
  for (int k = 1; k <= d; ++k) {
    SdpConstraint re, im;
    for (int i = 0; i + k < n; ++i) {
      re.lhs.push_back({0, i + k, i, half});
      re.lhs.push_back({0, n + i + k, n + i, half});
      im.lhs.push_back({0, n + i + k, i, half});
      im.lhs.push_back({0, n + i, i + k, -half});
    }
    re.rhs = 2 * f_eps.c[k - 1].re;
    im.rhs = 2 * f_eps.c[k - 1].im;
    prob.constraints.push_back(std::move(re));
    prob.constraints.push_back(std::move(im));
  }

  unsigned lg = 0;
  while ((1u << lg) < static_cast<unsigned>(n)) ++lg;
  SdpResult res = solve_sdp(prob, delta + 3, delta + 4 + lg, verbose);

  const Mat<Rational>& X = res.X[0];
  const Rational lam = res.X[1](0, 0);
  GramMatrix Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational re = (X(i, j) + X(n + i, n + j)) / 2;
      Rational im = (X(n + i, j) - X(i, n + j)) / 2;
      Q(i, j) = GaussianRational(std::move(re), std::move(im));
    }
  for (int i = 0; i < n; ++i) Q(i, i) += GaussianRational(lam);

  SdpSolution sol;
  sol.Q_tilde = std::move(Q);
  sol.lambda_tilde = certified_min_eig_lb(sol.Q_tilde, delta);
  if (sol.lambda_tilde < pow2(-static_cast<long>(delta)))
    throw SolverStalled("eigenvalue margin below the requested resolution");

  Rational worst(0);
  for (int k = 0; k <= d; ++k) {
    GaussianRational t = theta_trace(sol.Q_tilde, k);
    GaussianRational target = k == 0 ? GaussianRational(f_eps.f0) : f_eps.c[k - 1];
    worst = std::max(worst, Rational(abs(t.re - target.re) + abs(t.im - target.im)));
  }
  sol.residual = worst;
  if (sol.residual > pow2(-static_cast<long>(delta)))
    throw SolverStalled("constraint residual above the requested resolution");
  if (frobenius_norm2(sol.Q_tilde) > R * R) throw SolverStalled("Frobenius radius exceeded");
  return sol;
}

}  // namespace sohs
