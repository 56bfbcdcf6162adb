#include "sohs/certify.hpp"

#include <chrono>
#include <optional>
#include <utility>

#include "sohs/circle.hpp"
#include "sohs/errors.hpp"
#include "sohs/factor.hpp"
#include "sohs/gram.hpp"
#include "sohs/gram_sdp.hpp"
#include "sohs/roots.hpp"
#include "sohs/signsum.hpp"

namespace sohs {

const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::roots: return "roots";
    case CertKind::sdp_compensated: return "sdp-compensated";
    default: return "projected";
  }
}

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::identity_mismatch: return "identity-mismatch";
    case RejectReason::nonpositive_constant: return "nonpositive-constant";
    default: return "undecided-sign";
  }
}

namespace {

// 4|u_k|^2 for the nonzero compensation coefficients; the square roots the
// sign test takes are then exactly 2|u_k|.  Zero coefficients contribute no
// square and no radical.
std::vector<Rational> radical_terms(const std::vector<GaussianRational>& u) {
  std::vector<Rational> q;
  for (const auto& uk : u)
    if (!uk.is_zero()) q.push_back(Rational(4 * abs2(uk)));
  return q;
}

void double_state(PrecisionState& st) {
  st.delta *= 2;
  st.R *= 2;
  st.delta_c *= 2;
  st.delta_hat *= 2;
}

bool is_integral(const TrigPoly& f) {
  if (f.f0.get_den() != 1) return false;
  for (const auto& ck : f.c)
    if (ck.re.get_den() != 1 || ck.im.get_den() != 1) return false;
  return true;
}

Int denominator_lcm(const TrigPoly& f) {
  Int l = f.f0.get_den();
  for (const auto& ck : f.c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ck.re.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ck.im.get_den().get_mpz_t());
  }
  return l;
}

using Tick = std::chrono::steady_clock::time_point;

Tick now() { return std::chrono::steady_clock::now(); }

// Accumulates the elapsed seconds since t0 into the slot, if a timer sink
// was supplied; retries keep adding to the same stage.
void lap(CertifyTimers* timers, double CertifyTimers::* slot, Tick t0) {
  if (timers) timers->*slot += std::chrono::duration<double>(now() - t0).count();
}

struct RootsAttempt {
  Rational a;
  TrigPoly u;
  std::vector<GaussianRational> alphas;
};

// Round the pair representatives to b fractional bits and rebuild the
// compensated identity f = eps + u + aF; a is chosen so the constant
// mismatch vanishes (F0 = sum of squared moduli of the product's
// coefficients is positive, and f0 > eps because f - eps is positive).
RootsAttempt roots_attempt(const TrigPoly& f, const Rational& eps,
                           const std::vector<GaussianRational>& primaries,
                           unsigned b) {
  RootsAttempt at;
  ComplexPoly g(std::vector<GaussianRational>{GaussianRational(1)});
  at.alphas.reserve(primaries.size());
  for (const auto& al : primaries) {
    GaussianRational r(round_dyadic(al.re, b), round_dyadic(al.im, b));
    g = g * ComplexPoly(std::vector<GaussianRational>{-r, GaussianRational(1)});
    at.alphas.push_back(std::move(r));
  }
  TrigPoly F = mul_star(g);
  at.a = Rational((f.f0 - eps) / F.f0);
  at.u = sub_const(f, eps) - at.a * F;
  return at;
}

}  // namespace

SohsCertificate csos1(const TrigPoly& f, unsigned delta0, std::uint64_t seed,
                      unsigned max_bits, CertifyTimers* timers) {
  if (!is_integral(f)) {
    // Roots are invariant under scaling, so clearing denominators only
    // rescales the rational certificate data.
    Rational L(denominator_lcm(f));
    SohsCertificate cert = csos1(L * f, delta0, seed, max_bits, timers);
    Rational inv = Rational(1) / L;
    cert.epsilon *= inv;
    cert.a *= inv;
    cert.u0 *= inv;
    for (auto& uk : cert.u) {
      uk.re *= inv;
      uk.im *= inv;
    }
    return cert;
  }

  Tick t0 = now();
  Rational eps = find_epsilon(f);
  lap(timers, &CertifyTimers::t_epsilon, t0);
  TrigPoly feps = sub_const(f, eps);
  PrecisionState st;
  st.delta = delta0;

  for (;;) {
    RootSet rs = complex_roots(feps, st.delta, seed, max_bits);
    std::vector<GaussianRational> primaries = rs.primaries();
    Tick tu = now();

    auto attempt = [&](unsigned b) -> std::optional<RootsAttempt> {
      RootsAttempt at = roots_attempt(f, eps, primaries, b);
      Sign s = sign_of_root_sum(eps / 4, radical_terms(at.u.c), max_bits);
      if (s == Sign::positive || s == Sign::zero) return at;
      return std::nullopt;
    };

    // Fewest fractional bits whose rounded roots still compensate within
    // eps/4: doubling to bracket, then bisection for the first pass.
    unsigned lo = 0, hi = 0;
    std::optional<RootsAttempt> hit;
    for (unsigned b = 1; b <= 2 * st.delta; b *= 2) {
      if ((hit = attempt(b))) {
        hi = b;
        break;
      }
      lo = b;
    }
    if (hit) {
      while (lo + 1 < hi) {
        unsigned mid = lo + (hi - lo) / 2;
        if (auto at = attempt(mid)) {
          hi = mid;
          hit = std::move(at);
        } else {
          lo = mid;
        }
      }
      SohsCertificate cert;
      cert.kind = CertKind::roots;
      cert.epsilon = eps;
      cert.a = hit->a;
      cert.u0 = hit->u.f0;  // zero by construction
      cert.u = std::move(hit->u.c);
      cert.alphas = std::move(hit->alphas);
      cert.meta = st;
      lap(timers, &CertifyTimers::t_u, tu);
      return cert;
    }

    lap(timers, &CertifyTimers::t_u, tu);
    double_state(st);
    if (st.delta > max_bits)
      throw PrecisionExhausted("root compensation did not shrink below eps/4");
  }
}

SohsCertificate csos2(const TrigPoly& f, unsigned delta0, unsigned max_bits,
                      CertifyTimers* timers) {
  Tick t0 = now();
  Rational eps = find_epsilon(f);
  lap(timers, &CertifyTimers::t_epsilon, t0);
  TrigPoly feps = sub_const(f, eps);
  const int d = feps.degree();
  PrecisionState st;
  st.delta = delta0;
  st.R = gram_radius(feps);
  st.delta_c = delta0;

  for (;;) {
    try {
      SdpSolution sol = solve_gram_sdp(feps, st.delta, st.R);
      if (cholesky_pivot_condition(sol.lambda_tilde, d, st.delta_c)) {
        Tick tu = now();
        std::vector<ComplexPoly> sq =
            cholesky_approx(sol.Q_tilde, sol.lambda_tilde, st.delta_c);
        TrigPoly u = feps - sohs_value(sq);
        Rational margin = Rational(eps - abs(u.f0));
        bool ok = sign_of_root_sum(margin, radical_terms(u.c), max_bits) ==
                  Sign::positive;
        lap(timers, &CertifyTimers::t_u, tu);
        if (ok) {
          SohsCertificate cert;
          cert.kind = CertKind::sdp_compensated;
          cert.epsilon = eps;
          cert.u0 = u.f0;
          cert.u = std::move(u.c);
          cert.squares = std::move(sq);
          cert.meta = st;
          return cert;
        }
      }
    } catch (const SolverStalled&) {
      // retry below while the precision ladder has headroom
      if (st.delta + 3 > 380) throw;
    } catch (const PivotNonpositive&) {
    }
    double_state(st);
    if (st.delta > max_bits)
      throw PrecisionExhausted("SDP compensation did not shrink below eps");
  }
}

SohsCertificate csos3(const TrigPoly& f, unsigned delta0, unsigned max_bits,
                      CertifyTimers* timers) {
  Tick t0 = now();
  bool positive = is_positive_on_circle(f);
  lap(timers, &CertifyTimers::t_epsilon, t0);
  if (!positive)
    throw NotPositiveOnCircle("input is not strictly positive on the circle");
  PrecisionState st;
  st.delta = delta0;
  st.R = gram_radius(f);
  st.delta_hat = delta0;

  for (;;) {
    std::optional<SdpSolution> sol;
    try {
      sol = solve_gram_sdp(f, st.delta, st.R);
    } catch (const SolverStalled&) {
      if (st.delta + 3 > 380) throw;
    }
    if (sol) {
      // lambda_tilde >= 2^-delta on return, so the rounded-and-projected
      // matrix stays PSD once the rounding is fine enough relative to the
      // solver residual; past the cap the residual itself was too big.
      Tick tu = now();
      for (unsigned dh = st.delta_hat; dh <= 4 * st.delta + 64; dh *= 2) {
        GramMatrix proj =
            project_to_coefficients(round_dyadic(sol->Q_tilde, dh), f);
        if (auto F = ldlt_exact(proj)) {
          std::vector<ComplexPoly> sq = ldlt_squares(*F);
          SohsCertificate cert;
          cert.kind = CertKind::projected;
          for (std::size_t k = 0; k < sq.size(); ++k) {
            if (F->D[k] == 0) continue;  // zero weight contributes nothing
            cert.weights.push_back(F->D[k]);
            cert.squares.push_back(std::move(sq[k]));
          }
          st.delta_hat = dh;
          cert.meta = st;
          lap(timers, &CertifyTimers::t_u, tu);
          return cert;
        }
      }
      lap(timers, &CertifyTimers::t_u, tu);
    }
    double_state(st);
    if (st.delta > max_bits)
      throw PrecisionExhausted("projected Gram matrix never came out PSD");
  }
}

VerifyResult verify(const TrigPoly& f, const SohsCertificate& cert,
                    unsigned max_bits) {
  VerifyResult res;
  auto reject = [&](RejectReason r) {
    res.accepted = false;
    res.reason = r;
    return res;
  };

  if (cert.kind == CertKind::projected) {
    if (cert.weights.size() != cert.squares.size())
      return reject(RejectReason::identity_mismatch);
    for (const auto& c : cert.weights)
      if (sign(c) <= 0) return reject(RejectReason::nonpositive_constant);
    TrigPoly rhs;
    for (std::size_t k = 0; k < cert.squares.size(); ++k)
      rhs = rhs + cert.weights[k] * mul_star(cert.squares[k]);
    if (!(rhs == f)) return reject(RejectReason::identity_mismatch);
    res.accepted = true;
    return res;
  }

  TrigPoly rhs(Rational(cert.epsilon + cert.u0), cert.u);
  if (cert.kind == CertKind::roots) {
    ComplexPoly g(std::vector<GaussianRational>{GaussianRational(1)});
    for (const auto& al : cert.alphas)
      g = g * ComplexPoly(std::vector<GaussianRational>{-al, GaussianRational(1)});
    rhs = rhs + cert.a * mul_star(g);
    if (!(rhs == f)) return reject(RejectReason::identity_mismatch);
    if (sign(cert.a) <= 0) return reject(RejectReason::nonpositive_constant);
  } else {
    rhs = rhs + sohs_value(cert.squares);
    if (!(rhs == f)) return reject(RejectReason::identity_mismatch);
  }

  // Strict positivity of the leftover constant eps - |u0| - 2 sum|u_k|, the
  // coefficient of the trivial square after each u_k pair is absorbed.
  Rational margin = Rational(cert.epsilon - abs(cert.u0));
  Sign s = sign_of_root_sum(margin, radical_terms(cert.u), max_bits);
  if (s == Sign::undecided) return reject(RejectReason::undecided_sign);
  if (s != Sign::positive) return reject(RejectReason::nonpositive_constant);
  res.accepted = true;
  return res;
}

}  // namespace sohs
