#pragma once

// Positivity certificates for trig polynomials on the unit circle.  Three
// producers share one exact verifier:
//
//   roots            f = eps + u0 + sum(u_k z^-k + cc) + a prod (z-a_j)(z^-1-conj a_j)
//   sdp-compensated  f = eps + u0 + sum(u_k z^-k + cc) + sum s_j s_j*
//   projected        f = sum c_j s_j s_j*           (exact, no perturbation)
//
// The first two identities are sums of Hermitian squares once
// eps - |u0| - 2 sum|u_k| > 0; that sign is decided exactly from the
// rational values |u_k|^2, no radical is ever materialized.  The numeric
// work (root isolation, SDP, truncated Cholesky) only proposes data; every
// emitted certificate has been through the same exact checks verify() runs.

#include <cstdint>
#include <optional>
#include <vector>

#include "sohs/poly.hpp"
#include "sohs/rational.hpp"

namespace sohs {

enum class CertKind { roots, sdp_compensated, projected };

const char* to_string(CertKind k);

// Working-precision knobs.  A retry doubles all four in lockstep.
struct PrecisionState {
  unsigned delta = 1;      // target accuracy 2^-delta for roots / SDP
  Rational R = 1;          // Frobenius radius accepted from the SDP
  unsigned delta_c = 1;    // truncated-Cholesky significand bits
  unsigned delta_hat = 1;  // dyadic rounding bits before projection
};

struct SohsCertificate {
  CertKind kind = CertKind::roots;
  Rational epsilon;                      // roots, sdp-compensated
  Rational a;                            // roots: weight of the root product
  Rational u0;                           // roots, sdp-compensated
  std::vector<GaussianRational> u;       // u[k-1] compensates z^-k
  std::vector<GaussianRational> alphas;  // roots: one root per conjugate pair
  std::vector<ComplexPoly> squares;      // sdp-compensated, projected
  std::vector<Rational> weights;         // projected
  PrecisionState meta;                   // state the certificate was found at
};

// Stage timers for the benchmark harness.  t_epsilon covers locating the
// perturbation (the positivity precheck, for the projected path); t_u covers
// building the compensation or projection data.  They are component timers,
// not a partition: root isolation and solver retries land in neither.
struct CertifyTimers {
  double t_epsilon = 0;
  double t_u = 0;
};

inline bool operator==(const PrecisionState& a, const PrecisionState& b) {
  return a.delta == b.delta && a.R == b.R && a.delta_c == b.delta_c &&
         a.delta_hat == b.delta_hat;
}

inline bool operator==(const SohsCertificate& a, const SohsCertificate& b) {
  return a.kind == b.kind && a.epsilon == b.epsilon && a.a == b.a &&
         a.u0 == b.u0 && a.u == b.u && a.alphas == b.alphas &&
         a.squares == b.squares && a.weights == b.weights && a.meta == b.meta;
}

// Root-isolation path.  Approximates the roots of f - eps, takes one
// representative per reciprocal-conjugate pair, and compensates the exact
// mismatch u = f - eps - aF.  Roots are re-rounded to the fewest dyadic bits
// that keep 2 sum|u_k| <= eps/4, so certificates stay small.  Non-integer
// input is cleared by the coefficient denominator lcm and the certificate
// rescaled.  Throws NotPositiveOnCircle / PrecisionExhausted.
SohsCertificate csos1(const TrigPoly& f, unsigned delta0 = 16,
                      std::uint64_t seed = 1, unsigned max_bits = 1u << 20,
                      CertifyTimers* timers = nullptr);

// SDP path: Gram matrix of f - eps from the interior-point solver, squares
// from the truncated Cholesky factorization, mismatch compensated as above.
// Throws NotPositiveOnCircle / SolverStalled / PrecisionExhausted.
SohsCertificate csos2(const TrigPoly& f, unsigned delta0 = 16,
                      unsigned max_bits = 1u << 20,
                      CertifyTimers* timers = nullptr);

// Round-and-project path: Gram matrix of f itself, rounded dyadically and
// projected per subdiagonal so the coefficient identity is exact, then
// factored by exact LDL*.  No perturbation appears in the certificate.
// Throws NotPositiveOnCircle / SolverStalled / PrecisionExhausted.
SohsCertificate csos3(const TrigPoly& f, unsigned delta0 = 16,
                      unsigned max_bits = 1u << 20,
                      CertifyTimers* timers = nullptr);

enum class RejectReason { identity_mismatch, nonpositive_constant, undecided_sign };

const char* to_string(RejectReason r);

struct VerifyResult {
  bool accepted = false;
  std::optional<RejectReason> reason;
};

// Exact check that cert proves f > 0 on the circle: the polynomial identity
// is verified coefficientwise in rational arithmetic, weights must be
// positive, and the leftover constant's sign is decided by sign_of_root_sum.
VerifyResult verify(const TrigPoly& f, const SohsCertificate& cert,
                    unsigned max_bits = 1u << 20);

}  // namespace sohs
