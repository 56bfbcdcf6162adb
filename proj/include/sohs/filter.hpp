#pragma once

// Certified linear-phase FIR filter design.  The filter H(z) = sum h_k z^-k
// (real, symmetric coefficients) must stay within gamma_p of 1 on the
// passband [0, omega_p] and within gamma_s of 0 on the stopband [omega_s, pi]
// while its stopband energy is minimized.  Each band constraint becomes d+1
// linear equations between h and a pair of Gram matrices, via the interval
// decomposition: a cosine polynomial is nonnegative on [alpha, beta] iff it
// is F1 + (cos w - cos beta)(cos alpha - cos w) F2 with F1, F2 sums of
// squares.
//
// Trigonometric constants are replaced by dyadic rationalizations with
// stored enclosures, so the emitted certificate is exact for the
// rationalized problem and the enclosures quantify the distance to the true
// one.  The energy interval is evaluated against the enclosures directly and
// therefore bounds the true stopband energy of the emitted coefficients.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sohs/factor.hpp"
#include "sohs/gram.hpp"
#include "sohs/interval.hpp"
#include "sohs/rational.hpp"
#include "sohs/sdp.hpp"

namespace sohs {

struct FilterSpec {
  int d = 25;                // filter order; coefficients h_0..h_d
  Rational omega_p;          // passband edge as a fraction of pi
  Rational omega_s;          // stopband edge as a fraction of pi
  Rational gamma_p;          // passband ripple bound
  Rational gamma_s;          // stopband level bound
  unsigned spec_bits = 128;  // dyadic precision of the trig rationalizations
};

// Throws std::invalid_argument unless d >= 1, 0 < omega_p < omega_s < 1 and
// both ripple bounds are positive.
void validate(const FilterSpec& spec);

// One band [alpha, beta] of the design, reduced to rational data: a = cos
// alpha, b = cos beta, and for k = 0..d the list of (diagonal, weight) pairs
// describing how the diagonal sums of the second Gram matrix enter the
// z^-k coefficient of (cos w - b)(a - cos w) F2.  Diagonals out of range are
// dropped; negative indices fold onto their mirror.
struct BandWindow {
  Rational a, b;
  std::vector<std::vector<std::pair<int, Rational>>> phi;
};

// Weighted diagonal-sum pairing: sum of w * theta_trace(B, m) over the k-th
// window list.  B is the real second member of the band's Gram pair.
Rational window_trace(const BandWindow& w, int k, const GramMatrix& B);

struct FilterSdpData {
  FilterSpec spec;
  RatInterval cos_wp, cos_ws;         // enclosures of the true cosines
  BandWindow pass;                    // [0, omega_p]: a = 1 exactly
  BandWindow stop;                    // [omega_s, pi]: b = -1 exactly
  BandWindow lower;                   // band carrying the H >= -gamma_s side
  std::vector<RatInterval> c_bounds;  // stopband autocorrelation row, 0..2d
  std::vector<Rational> c;            // dyadic midpoints of c_bounds
  Mat<Rational> Ctilde;               // (d+1)^2 compressed energy matrix
  Mat<Rational> Lc;                   // dyadic factor, Lc^T Lc ~ Ctilde
  Rational shift;                     // 1e-9 diagonal shift kept on Q7
  std::array<int, 8> block_index;     // Q1..Q7 and epigraph block positions
  SdpProblemData prob;
};

// Assembles the equality families, the shifted Q7 block and the epigraph
// block [[t, (Lc h)^T], [Lc h, I]] whose top-left entry is minimized.
FilterSdpData build_filter_sdp(const FilterSpec& spec);

// Rounded floating solution.  The Q7 slot holds the solver's shifted block,
// i.e. Q7 - shift I.
struct FilterNumerical {
  std::vector<Rational> h;
  std::array<GramMatrix, 7> Q;
  Rational energy_estimate;
};

FilterNumerical solve_filter_sdp(const FilterSdpData& data, unsigned tol_bits = 26,
                                 unsigned round_bits = 44, bool verbose = false);

struct FilterCertificate {
  std::vector<Rational> h;              // exact filter coefficients
  std::array<GramMatrix, 7> Q;          // Q7 includes the diagonal shift
  RatInterval energy;                   // encloses the true stopband energy
  std::array<LdltFactor, 7> witnesses;  // Q1..Q6 and Q7 - shift I
};

// Freezes the second member of each Gram pair at its rounded value, projects
// the first member onto the exact residual targets, certifies all seven by
// exact LDL^T and recomputes the energy interval.  Throws ProjectionBrokePsd
// when a pivot turns negative.
FilterCertificate project_filter_certificate(const FilterSdpData& data,
                                             const FilterNumerical& sol);

// Solve-and-project pipeline; on a PSD failure retries with finer rounding.
// Throws Infeasible, SolverStalled or ProjectionBrokePsd.
FilterCertificate design_filter(const FilterSdpData& data, bool verbose = false);

// Exact recheck of everything the certificate claims: the four equality
// families against the rationalized data, the seven factorization witnesses
// (nonnegative pivots, exact reconstruction, Q7 shifted), and containment of
// the recomputed energy interval.
bool check_filter_certificate(const FilterSdpData& data, const FilterCertificate& cert);

// Recomputed enclosure of the stopband energy of cert.h.
RatInterval filter_energy(const FilterSdpData& data, const std::vector<Rational>& h);

std::string filter_report(const FilterSdpData& data, const FilterCertificate& cert);
std::string filter_certificate_to_json(const FilterSdpData& data,
                                       const FilterCertificate& cert);

}  // namespace sohs
