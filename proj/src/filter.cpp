#include "sohs/filter.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>

#include "sohs/errors.hpp"
#include "sohs/mpfloat.hpp"

namespace sohs {

namespace {

using nlohmann::json;

// cos(pi q) and sin(pi q) are rational exactly when 2q is an integer; using
// those values verbatim keeps autocorrelation zeros exact (sin k pi = 0).
std::optional<Rational> exact_cos_pi(const Rational& q) {
  Rational twoq = 2 * q;
  if (twoq.get_den() != 1) return std::nullopt;
  unsigned long r = mpz_fdiv_ui(twoq.get_num().get_mpz_t(), 4);
  if (r == 1 || r == 3) return Rational(0);
  return Rational(r == 0 ? 1 : -1);
}

std::optional<Rational> exact_sin_pi(const Rational& q) {
  return exact_cos_pi(Rational(q - Rational(1, 2)));
}

// Dyadic rationalization with a stored enclosure that contains both the true
// value and the midpoint actually used.
struct Rationalized {
  Rational mid;
  RatInterval bounds;
};

Rationalized rationalize(const RatInterval& enc, unsigned bits) {
  DyadicInterval dy = to_dyadic(enc, bits);
  return {dy.center, dy.as_interval()};
}

Rationalized rationalize_cos_pi(const Rational& q, unsigned bits) {
  if (auto v = exact_cos_pi(q)) return {*v, RatInterval(*v)};
  return rationalize(cos_pi_ratio(q, bits + 16), bits);
}

// Window lists for one band: entry (m, w) of phi[k] contributes
// w * theta_trace(B, m) to the z^-k coefficient of (cos w - b)(a - cos w) F2,
// where F2 = v^T B v on the monomial basis of size nB.  Negative diagonal
// indices fold onto their mirror image, indices >= nB vanish.
std::vector<std::vector<std::pair<int, Rational>>> window_lists(const Rational& a,
                                                                const Rational& b,
                                                                int d, int nB) {
  std::vector<std::vector<std::pair<int, Rational>>> phi(d + 1);
  Rational half_sum((a + b) / 2);
  Rational mid_term(-(a * b + Rational(1, 2)));
  for (int k = 0; k <= d; ++k) {
    std::map<int, Rational> acc;
    auto add = [&](int m, const Rational& w) {
      m = std::abs(m);
      if (m < nB) acc[m] += w;
    };
    add(k - 1, half_sum);
    add(k + 1, half_sum);
    add(k, mid_term);
    add(k - 2, Rational(-1, 4));
    add(k + 2, Rational(-1, 4));
    for (auto& [m, w] : acc) {
      if (w != 0) phi[k].emplace_back(m, w);
    }
  }
  return phi;
}

void add_theta(std::vector<SdpEntry>& lhs, int block, int n, int k) {
  if (block < 0) return;
  if (k == 0) {
    for (int i = 0; i < n; ++i) lhs.push_back({block, i, i, Rational(1)});
  } else {
    for (int i = 0; i + k < n; ++i) lhs.push_back({block, i + k, i, Rational(1, 2)});
  }
}

void add_window(std::vector<SdpEntry>& lhs, int block, int n,
                const std::vector<std::pair<int, Rational>>& terms) {
  if (block < 0) return;
  for (const auto& [m, w] : terms) {
    if (m == 0) {
      for (int i = 0; i < n; ++i) lhs.push_back({block, i, i, w});
    } else {
      Rational hw(w / 2);
      for (int i = 0; i + m < n; ++i) lhs.push_back({block, i + m, i, hw});
    }
  }
}

GramMatrix to_gram(const Mat<Rational>& A) {
  GramMatrix G(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) G(i, j) = GaussianRational(A(i, j));
  return G;
}

GramMatrix shifted(const GramMatrix& Q, const Rational& s) {
  GramMatrix R = Q;
  for (int i = 0; i < R.rows(); ++i) R(i, i) = R(i, i) + GaussianRational(s);
  return R;
}

std::string decimal(const Rational& x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9e", x.get_d());
  return buf;
}

}  // namespace

void validate(const FilterSpec& spec) {
  if (spec.d < 1) throw std::invalid_argument("filter order must be at least 1");
  if (!(0 < spec.omega_p && spec.omega_p < spec.omega_s && spec.omega_s < 1))
    throw std::invalid_argument("band edges must satisfy 0 < omega_p < omega_s < pi");
  if (spec.gamma_p <= 0 || spec.gamma_s <= 0)
    throw std::invalid_argument("ripple bounds must be positive");
  if (spec.spec_bits < 16) throw std::invalid_argument("spec_bits too small");
}

Rational window_trace(const BandWindow& w, int k, const GramMatrix& B) {
  Rational acc(0);
  for (const auto& [m, weight] : w.phi[k]) acc += weight * theta_trace(B, m).re;
  return acc;
}

FilterSdpData build_filter_sdp(const FilterSpec& spec) {
  validate(spec);
  const int d = spec.d, nA = d + 1, nB = d - 1, nE = d + 2;
  FilterSdpData data;
  data.spec = spec;
  data.shift = Rational(1, 1000000000);

  Rationalized cp = rationalize_cos_pi(spec.omega_p, spec.spec_bits);
  Rationalized cs = rationalize_cos_pi(spec.omega_s, spec.spec_bits);
  data.cos_wp = cp.bounds;
  data.cos_ws = cs.bounds;
  data.pass.a = Rational(1);
  data.pass.b = cp.mid;
  data.stop.a = cs.mid;
  data.stop.b = Rational(-1);
  data.pass.phi = window_lists(data.pass.a, data.pass.b, d, nB);
  data.stop.phi = window_lists(data.stop.a, data.stop.b, d, nB);
  // the fourth family pins H from below on the stopband, closing the modulus
  // constraint |H| <= gamma_s there
  data.lower = data.stop;

  // Stopband autocorrelation row: c_0 = 1 - omega_s/pi is exactly rational,
  // c_k = -sin(k omega_s)/(k pi) for k >= 1.
  data.c.resize(2 * d + 1);
  data.c_bounds.resize(2 * d + 1);
  data.c[0] = 1 - spec.omega_s;
  data.c_bounds[0] = RatInterval(data.c[0]);
  RatInterval pi_enc = pi_enclosure(spec.spec_bits + 16);
  for (int k = 1; k <= 2 * d; ++k) {
    if (auto v = exact_sin_pi(Rational(k * spec.omega_s))) {
      if (*v == 0) {
        data.c[k] = 0;
        data.c_bounds[k] = RatInterval(Rational(0));
        continue;
      }
      Rationalized r = rationalize(divide(RatInterval(Rational(-*v)), Rational(k) * pi_enc),
                                   spec.spec_bits);
      data.c[k] = r.mid;
      data.c_bounds[k] = r.bounds;
      continue;
    }
    RatInterval s = sin_pi_ratio(Rational(k * spec.omega_s), spec.spec_bits + 16);
    Rationalized r = rationalize(divide(-s, Rational(k) * pi_enc), spec.spec_bits);
    data.c[k] = r.mid;
    data.c_bounds[k] = r.bounds;
  }

  // Compressed energy matrix: with the symmetric coefficient vector folded
  // onto h_0..h_d, Ctilde(i, j) sums the Toeplitz entries over the mirrored
  // index pairs.
  data.Ctilde = Mat<Rational>::Zero(nA, nA);
  data.Ctilde(0, 0) = data.c[0];
  for (int j = 1; j <= d; ++j) data.Ctilde(0, j) = data.Ctilde(j, 0) = 2 * data.c[j];
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      data.Ctilde(i, j) = 2 * (data.c[std::abs(i - j)] + data.c[i + j]);

  // A dyadic factor Lc with Lc^T Lc ~ Ctilde for the epigraph block.  The
  // exact pivoted LDL^T always exists up to a tiny ridge; Lc is solver
  // plumbing only, so the rounding here never touches the certificate.
  {
    GramMatrix G = to_gram(data.Ctilde);
    auto F = ldlt_exact(G);
    Int denom(1);
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), 96);
    Rational ridge(Int(1), denom);
    while (!F) {
      for (int i = 0; i < nA; ++i) G(i, i) = G(i, i) + GaussianRational(ridge);
      ridge *= 2;
      F = ldlt_exact(G);
    }
    std::vector<int> inv(nA);
    for (int i = 0; i < nA; ++i) inv[F->perm[i]] = i;
    data.Lc = Mat<Rational>::Zero(nA, nA);
    for (int k = 0; k < nA; ++k) {
      Rational sd = round_dyadic(sqrt_outward(RatInterval(F->D[k]), 80).mid(), 72);
      for (int c = 0; c < nA; ++c)
        data.Lc(k, c) = round_dyadic(Rational(sd * F->L(inv[c], k).re), 64);
    }
  }

  // Blocks: Q1..Q7 then the epigraph; order-1 designs have no second members.
  data.block_index.fill(-1);
  SdpProblemData& prob = data.prob;
  const int logical_sizes[8] = {nA, nA, nB, nA, nB, nA, nB, nE};
  for (int s = 0; s < 8; ++s) {
    if (logical_sizes[s] <= 0) continue;
    data.block_index[s] = static_cast<int>(prob.block_sizes.size());
    prob.block_sizes.push_back(logical_sizes[s]);
  }
  prob.n_free = nA;
  prob.objective.push_back({data.block_index[7], 0, 0, Rational(1)});

  auto free_row = [&](int k, int sign) {
    std::vector<Rational> f(nA, Rational(0));
    f[k] = sign;
    return f;
  };

  for (int k = 0; k <= d; ++k) {
    SdpConstraint c1;
    add_theta(c1.lhs, data.block_index[0], nA, k);
    c1.free_coeffs = free_row(k, 1);
    c1.rhs = k == 0 ? Rational(1 + spec.gamma_p) : Rational(0);
    prob.constraints.push_back(std::move(c1));
  }
  for (int k = 0; k <= d; ++k) {
    SdpConstraint c2;
    add_theta(c2.lhs, data.block_index[1], nA, k);
    add_window(c2.lhs, data.block_index[2], nB, data.pass.phi[k]);
    c2.free_coeffs = free_row(k, -1);
    c2.rhs = k == 0 ? Rational(spec.gamma_p - 1) : Rational(0);
    prob.constraints.push_back(std::move(c2));
  }
  for (int k = 0; k <= d; ++k) {
    SdpConstraint c3;
    add_theta(c3.lhs, data.block_index[3], nA, k);
    add_window(c3.lhs, data.block_index[4], nB, data.stop.phi[k]);
    c3.free_coeffs = free_row(k, 1);
    c3.rhs = k == 0 ? spec.gamma_s : Rational(0);
    prob.constraints.push_back(std::move(c3));
  }
  for (int k = 0; k <= d; ++k) {
    SdpConstraint c4;
    add_theta(c4.lhs, data.block_index[5], nA, k);
    add_window(c4.lhs, data.block_index[6], nB, data.lower.phi[k]);
    c4.free_coeffs = free_row(k, -1);
    // the solver's block is Q7 - shift I, so the identity's shifted part
    // moves to the right-hand side
    Rational tr(0);
    for (const auto& [m, w] : data.lower.phi[k])
      if (m == 0) tr += w * nB;
    c4.rhs = (k == 0 ? spec.gamma_s : Rational(0)) - data.shift * tr;
    prob.constraints.push_back(std::move(c4));
  }

  const int be = data.block_index[7];
  for (int i = 0; i <= d; ++i) {
    SdpConstraint link;
    link.lhs.push_back({be, 1 + i, 0, Rational(1, 2)});
    link.free_coeffs.resize(nA, Rational(0));
    for (int j = 0; j <= d; ++j) link.free_coeffs[j] = -data.Lc(i, j);
    link.rhs = 0;
    prob.constraints.push_back(std::move(link));
  }
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) {
      SdpConstraint pin;
      pin.lhs.push_back({be, 1 + i, 1 + j, i == j ? Rational(1) : Rational(1, 2)});
      pin.rhs = i == j ? Rational(1) : Rational(0);
      prob.constraints.push_back(std::move(pin));
    }
  }
  return data;
}

FilterNumerical solve_filter_sdp(const FilterSdpData& data, unsigned tol_bits,
                                 unsigned round_bits, bool verbose) {
  SdpResult res = solve_sdp(data.prob, tol_bits, round_bits, verbose);
  FilterNumerical out;
  out.h = res.free_values;
  for (int s = 0; s < 7; ++s) {
    int b = data.block_index[s];
    out.Q[s] = b < 0 ? GramMatrix(0, 0) : to_gram(res.X[b]);
  }
  out.energy_estimate = res.X[data.block_index[7]](0, 0);
  return out;
}

FilterCertificate project_filter_certificate(const FilterSdpData& data,
                                             const FilterNumerical& sol) {
  const FilterSpec& spec = data.spec;
  const int d = spec.d;
  FilterCertificate cert;
  cert.h = sol.h;

  // second members frozen at their rounded values; Q7 regains the shift
  cert.Q[2] = sol.Q[2];
  cert.Q[4] = sol.Q[4];
  cert.Q[6] = shifted(sol.Q[6], data.shift);

  auto target = [&](int family) {
    std::vector<GaussianRational> c(d);
    Rational f0;
    for (int k = 0; k <= d; ++k) {
      Rational one0(k == 0 ? 1 : 0);
      Rational v;
      switch (family) {
        case 0: v = (1 + spec.gamma_p) * one0 - cert.h[k]; break;
        case 1:
          v = cert.h[k] - (1 - spec.gamma_p) * one0 -
              window_trace(data.pass, k, cert.Q[2]);
          break;
        case 2:
          v = spec.gamma_s * one0 - cert.h[k] - window_trace(data.stop, k, cert.Q[4]);
          break;
        default:
          v = spec.gamma_s * one0 + cert.h[k] - window_trace(data.lower, k, cert.Q[6]);
      }
      if (k == 0)
        f0 = v;
      else
        c[k - 1] = GaussianRational(v);
    }
    return TrigPoly(f0, std::move(c));
  };

  cert.Q[0] = project_to_coefficients(sol.Q[0], target(0));
  cert.Q[1] = project_to_coefficients(sol.Q[1], target(1));
  cert.Q[3] = project_to_coefficients(sol.Q[3], target(2));
  cert.Q[5] = project_to_coefficients(sol.Q[5], target(3));

  static const char* names[7] = {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"};
  for (int s = 0; s < 7; ++s) {
    const GramMatrix& W = s == 6 ? shifted(cert.Q[6], Rational(-data.shift)) : cert.Q[s];
    auto F = ldlt_exact(W);
    if (!F) {
      bool frozen = s == 2 || s == 4 || s == 6;
      throw ProjectionBrokePsd(std::string(frozen ? "rounded " : "projected ") +
                               names[s] + " is not positive semidefinite");
    }
    cert.witnesses[s] = std::move(*F);
  }
  cert.energy = filter_energy(data, cert.h);
  return cert;
}

FilterCertificate design_filter(const FilterSdpData& data, bool verbose) {
  const std::pair<unsigned, unsigned> ladder[3] = {{26, 44}, {27, 52}, {28, 60}};
  std::string last;
  for (auto [tol, rb] : ladder) {
    FilterNumerical sol = solve_filter_sdp(data, tol, rb, verbose);
    try {
      return project_filter_certificate(data, sol);
    } catch (const ProjectionBrokePsd& e) {
      last = e.what();
    }
  }
  throw ProjectionBrokePsd(last);
}

RatInterval filter_energy(const FilterSdpData& data, const std::vector<Rational>& h) {
  const int d = data.spec.d;
  std::vector<Rational> hv(2 * d + 1);
  for (int k = 0; k <= d; ++k) hv[d + k] = hv[d - k] = h[k];
  RatInterval total(Rational(0));
  for (int m = 0; m <= 2 * d; ++m) {
    Rational w(0);
    for (int i = 0; i + m <= 2 * d; ++i) w += hv[i] * hv[i + m];
    if (m > 0) w *= 2;
    total = total + w * data.c_bounds[m];
  }
  return total;
}

namespace {

bool check_impl(const FilterSdpData& data, const FilterCertificate& cert,
                std::vector<std::string>* lines) {
  const FilterSpec& spec = data.spec;
  const int d = spec.d, nA = d + 1, nB = d - 1;
  bool ok = true;
  auto note = [&](bool good, const std::string& what) {
    ok = ok && good;
    if (lines) lines->push_back((good ? "ok   " : "FAIL ") + what);
  };

  bool shape = static_cast<int>(cert.h.size()) == nA;
  const int want[7] = {nA, nA, nB, nA, nB, nA, nB};
  for (int s = 0; s < 7; ++s)
    shape = shape && cert.Q[s].rows() == std::max(want[s], 0) &&
            cert.Q[s].cols() == std::max(want[s], 0);
  note(shape, "certificate shapes match the filter order");
  if (!shape) return false;

  bool wit = true;
  for (int s = 0; s < 7; ++s) {
    const GramMatrix expect =
        s == 6 ? shifted(cert.Q[6], Rational(-data.shift)) : cert.Q[s];
    const LdltFactor& F = cert.witnesses[s];
    bool one = static_cast<int>(F.perm.size()) == expect.rows();
    for (const Rational& p : F.D) one = one && p >= 0;
    if (one && expect.rows() > 0) {
      GramMatrix R = ldlt_reconstruct(F);
      one = R.rows() == expect.rows();
      for (int i = 0; one && i < R.rows(); ++i)
        for (int j = 0; one && j < R.cols(); ++j) one = R(i, j) == expect(i, j);
    }
    wit = wit && one;
  }
  note(wit, "seven factorization witnesses (Q7 above its diagonal shift)");

  auto th = [&](int s, int k) { return theta_trace(cert.Q[s], k); };
  bool fam = true;
  for (int k = 0; k <= d; ++k) {
    GaussianRational t1 = th(0, k);
    GaussianRational t2 = th(1, k);
    GaussianRational t3 = th(3, k);
    GaussianRational t4 = th(5, k);
    fam = fam && t1.im == 0 && t2.im == 0 && t3.im == 0 && t4.im == 0;
    Rational one0 = k == 0 ? Rational(1) : Rational(0);
    fam = fam && t1.re == (1 + spec.gamma_p) * one0 - cert.h[k];
    fam = fam && t2.re + window_trace(data.pass, k, cert.Q[2]) ==
                     cert.h[k] - (1 - spec.gamma_p) * one0;
    fam = fam && t3.re + window_trace(data.stop, k, cert.Q[4]) ==
                     spec.gamma_s * one0 - cert.h[k];
    fam = fam && t4.re + window_trace(data.lower, k, cert.Q[6]) ==
                     spec.gamma_s * one0 + cert.h[k];
  }
  note(fam, "four equality families hold exactly (" + std::to_string(4 * nA) +
                " identities)");

  RatInterval e = filter_energy(data, cert.h);
  note(cert.energy.lo <= e.lo && e.hi <= cert.energy.hi,
       "energy interval encloses the recomputed one");
  return ok;
}

}  // namespace

bool check_filter_certificate(const FilterSdpData& data, const FilterCertificate& cert) {
  return check_impl(data, cert, nullptr);
}

std::string filter_report(const FilterSdpData& data, const FilterCertificate& cert) {
  const FilterSpec& spec = data.spec;
  std::string r;
  r += "linear-phase FIR filter, order " + std::to_string(spec.d) + "\n";
  r += "passband  [0, " + to_string(spec.omega_p) + " pi], ripple bound " +
       to_string(spec.gamma_p) + "\n";
  r += "stopband  [" + to_string(spec.omega_s) + " pi, pi], level bound " +
       to_string(spec.gamma_s) + "\n";
  r += "trig data rationalized at " + std::to_string(spec.spec_bits) + " bits\n\n";
  for (size_t k = 0; k < cert.h.size(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "h[%2zu] = % .15e\n", k, cert.h[k].get_d());
    r += buf;
  }
  r += "\ncertified stopband energy in [" + decimal(cert.energy.lo) + ", " +
       decimal(cert.energy.hi) + "]\n";
  double w = cert.energy.width().get_d();
  char buf[64];
  std::snprintf(buf, sizeof buf, "enclosure width %.3e\n\n", w);
  r += buf;
  std::vector<std::string> lines;
  bool ok = check_impl(data, cert, &lines);
  for (const auto& l : lines) r += l + "\n";
  r += ok ? "certificate verified\n" : "CERTIFICATE REJECTED\n";
  return r;
}

std::string filter_certificate_to_json(const FilterSdpData& data,
                                       const FilterCertificate& cert) {
  auto rat = [](const Rational& x) { return to_string(x); };
  auto real_mat = [&](const GramMatrix& Q) {
    json rows = json::array();
    for (int i = 0; i < Q.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < Q.cols(); ++j) row.push_back(rat(Q(i, j).re));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json j;
  j["kind"] = "fir-filter";
  j["d"] = data.spec.d;
  j["omega_p"] = rat(data.spec.omega_p);
  j["omega_s"] = rat(data.spec.omega_s);
  j["gamma_p"] = rat(data.spec.gamma_p);
  j["gamma_s"] = rat(data.spec.gamma_s);
  j["spec_bits"] = data.spec.spec_bits;
  j["shift"] = rat(data.shift);
  json h = json::array();
  for (const auto& hk : cert.h) h.push_back(rat(hk));
  j["h"] = std::move(h);
  json qs = json::array();
  for (const auto& Q : cert.Q) qs.push_back(real_mat(Q));
  j["Q"] = std::move(qs);
  j["energy"] = json::array({rat(cert.energy.lo), rat(cert.energy.hi)});
  json ws = json::array();
  for (const auto& W : cert.witnesses) {
    json w;
    w["perm"] = W.perm;
    json dv = json::array();
    for (const auto& p : W.D) dv.push_back(rat(p));
    w["D"] = std::move(dv);
    w["L"] = real_mat(W.L);
    ws.push_back(std::move(w));
  }
  j["witnesses"] = std::move(ws);
  return j.dump(1);
}

}  // namespace sohs
