#include "sohs/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sohs/errors.hpp"
#include "sohs/mpfloat.hpp"

namespace sohs {

namespace {

// Fixed-precision complex scratch value.
struct MC {
  BigFloat re, im;
  explicit MC(mpfr_prec_t w) : re(w), im(w) {}
};

void cset(MC& r, const MC& a) {
  mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
}

void cadd(MC& r, const MC& a, const MC& b) {
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void csub(MC& r, const MC& a, const MC& b) {
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

// r = a * b; r must not alias a or b.
void cmul(MC& r, const MC& a, const MC& b, BigFloat& t) {
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
}

void cabs2(BigFloat& r, const MC& a, BigFloat& t) {
  mpfr_sqr(r.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
}

// r = a / b; r must not alias a or b.
void cdiv(MC& r, const MC& a, const MC& b, BigFloat& t, BigFloat& n) {
  cabs2(n, b, t);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
}

bool czero(const MC& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

double rough_abs(const GaussianRational& v) {
  double a = std::abs(mpq_get_d(v.re.get_mpq_t()));
  double b = std::abs(mpq_get_d(v.im.get_mpq_t()));
  double m = std::max(a, b) + std::min(a, b) / 2;  // within a factor ~sqrt(2)
  if (!std::isfinite(m)) m = 1e300;
  return m;
}

struct AberthResult {
  bool converged = false;
  std::vector<GaussianRational> roots;
};

AberthResult aberth_once(const ComplexPoly& g, mpfr_prec_t w, unsigned abs_bits,
                         std::uint64_t seed, const std::vector<GaussianRational>& warm) {
  const int m = g.degree();
  std::vector<MC> c;
  c.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    MC v(w);
    mpfr_set_q(v.re.get(), g.c[j].re.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(v.im.get(), g.c[j].im.get_mpq_t(), MPFR_RNDN);
    c.push_back(std::move(v));
  }

  std::vector<MC> z;
  z.reserve(m);
  if (static_cast<int>(warm.size()) == m) {
    for (int j = 0; j < m; ++j) {
      MC v(w);
      mpfr_set_q(v.re.get(), warm[j].re.get_mpq_t(), MPFR_RNDN);
      mpfr_set_q(v.im.get(), warm[j].im.get_mpq_t(), MPFR_RNDN);
      z.push_back(std::move(v));
    }
  } else {
    double lead = rough_abs(g.c[m]);
    double r0 = 0;
    for (int j = 0; j < m; ++j) r0 = std::max(r0, rough_abs(g.c[j]) / lead);
    r0 = 1.25 * (1 + r0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jit(-0.12, 0.12);
    for (int j = 0; j < m; ++j) {
      double th = 2 * M_PI * (j + 0.5) / m + 0.3717 + jit(rng);
      MC v(w);
      mpfr_set_d(v.re.get(), r0 * std::cos(th), MPFR_RNDN);
      mpfr_set_d(v.im.get(), r0 * std::sin(th), MPFR_RNDN);
      z.push_back(std::move(v));
    }
  }

  // threshold^2 for the relative update test
  BigFloat thr2(w);
  mpfr_set_ui_2exp(thr2.get(), 1, -2 * static_cast<long>(abs_bits) - 8, MPFR_RNDN);

  BigFloat t(w), n(w), lhs(w), rhs(w);
  MC p(w), dp(w), tmp(w), diff(w), inv(w), s(w), newton(w), denom(w), delta(w);
  MC one(w);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);

  const int max_sweeps = 200 + 20 * m;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (int j = 0; j < m; ++j) {
      // Horner for p = g(z_j) and dp = g'(z_j)
      cset(p, c[m]);
      mpfr_set_zero(dp.re.get(), 1);
      mpfr_set_zero(dp.im.get(), 1);
      for (int k = m - 1; k >= 0; --k) {
        cmul(tmp, dp, z[j], t);
        cadd(dp, tmp, p);
        cmul(tmp, p, z[j], t);
        cadd(p, tmp, c[k]);
      }
      if (czero(p)) continue;
      if (czero(dp)) {
        // perturb away from a critical point
        mpfr_set_ui_2exp(t.get(), 1, -static_cast<long>(w) / 2, MPFR_RNDN);
        mpfr_add(z[j].re.get(), z[j].re.get(), t.get(), MPFR_RNDN);
        converged = false;
        continue;
      }
      cdiv(newton, p, dp, t, n);
      // s = sum_{k != j} 1/(z_j - z_k)
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        csub(diff, z[j], z[k]);
        if (czero(diff)) {
          mpfr_set_ui_2exp(diff.re.get(), 1, -static_cast<long>(w) / 2, MPFR_RNDN);
        }
        cdiv(inv, one, diff, t, n);
        cadd(s, s, inv);
      }
      cmul(tmp, newton, s, t);
      csub(denom, one, tmp);
      if (czero(denom)) {
        cset(delta, newton);
      } else {
        cdiv(delta, newton, denom, t, n);
      }
      csub(z[j], z[j], delta);
      // relative progress test: |delta|^2 > thr2 * |z_j|^2 means keep going
      cabs2(lhs, delta, t);
      cabs2(rhs, z[j], t);
      mpfr_mul(rhs.get(), rhs.get(), thr2.get(), MPFR_RNDN);
      if (mpfr_cmp(lhs.get(), rhs.get()) > 0) converged = false;
    }
  }

  AberthResult out;
  out.converged = converged;
  out.roots.reserve(m);
  for (int j = 0; j < m; ++j)
    out.roots.push_back({round_dyadic(rational_from_big(z[j].re.get()), abs_bits),
                         round_dyadic(rational_from_big(z[j].im.get()), abs_bits)});
  return out;
}

bool residuals_ok(const ComplexPoly& g, const std::vector<GaussianRational>& roots,
                  unsigned delta) {
  const int m = g.degree();
  Rational norm2(0);
  for (const auto& cj : g.c) norm2 += abs2(cj);
  for (const auto& r : roots) {
    Rational a2 = abs2(r);
    Rational grow = a2 > 1 ? a2 : Rational(1);
    Rational cap = pow2(2 - 2 * static_cast<long>(delta)) * norm2;
    for (int k = 0; k < m; ++k) cap *= grow;  // max(1,|r|^2)^m, m = 2d
    if (abs2(g.eval(r)) > cap) return false;
  }
  return true;
}

}  // namespace

ComplexPoly circle_numerator(const TrigPoly& f) {
  int d = f.degree();
  ComplexPoly g;
  g.c.assign(2 * d + 1, GaussianRational(0));
  g.c[d] = GaussianRational(f.f0);
  for (int k = 1; k <= d; ++k) {
    g.c[d - k] = f.c[k - 1];
    g.c[d + k] = conj(f.c[k - 1]);
  }
  g.trim();
  return g;
}

Rational separation_lower_bound(const ComplexPoly& g) {
  int m = g.degree();
  if (m <= 1) return 0;
  Int den(1);
  for (const auto& c : g.c) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re.get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im.get_den().get_mpz_t());
  }
  Rational norm2(0);
  for (const auto& c : g.c) norm2 += abs2(GaussianRational(den * c.re, den * c.im));
  // sep >= sqrt(3 / (m^(m+2) N^(m-1))) with N = |g|_2^2
  Int mp;
  mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(m + 2));
  Rational inside = Rational(3) / (Rational(mp) * pow_rational(norm2, m - 1));
  long e = floor_log2_abs(inside);
  unsigned bits = static_cast<unsigned>(std::max(16l, -e / 2 + 8));
  for (;;) {
    Rational lo = sqrt_enclosure(inside, bits).lo;
    if (lo > 0) return lo;
    bits *= 2;
  }
}

std::vector<std::pair<int, int>> pair_reciprocal(
    const std::vector<GaussianRational>& roots, unsigned delta) {
  const int n = static_cast<int>(roots.size());
  if (n % 2 != 0) throw PairingFailed("odd number of roots");
  // canonical processing order: decreasing modulus, then lexicographic
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Rational ma = abs2(roots[a]), mb = abs2(roots[b]);
    if (ma != mb) return ma > mb;
    if (roots[a].re != roots[b].re) return roots[a].re < roots[b].re;
    return roots[a].im < roots[b].im;
  });
  std::vector<bool> used(n, false);
  std::vector<std::pair<int, int>> pairs;
  Rational tol = pow2(-static_cast<long>(delta));  // (2^-delta/2)^2
  for (int oi = 0; oi < n; ++oi) {
    int i = order[oi];
    if (used[i]) continue;
    used[i] = true;
    int best = -1;
    Rational best_err;
    for (int oj = 0; oj < n; ++oj) {
      int j = order[oj];
      if (used[j]) continue;
      Rational err = abs2(roots[i] * conj(roots[j]) - GaussianRational(1));
      if (best < 0 || err < best_err) {
        best = j;
        best_err = err;
      }
    }
    if (best < 0 || best_err > tol)
      throw PairingFailed("no reciprocal partner within tolerance");
    used[best] = true;
    if (abs2(roots[i]) >= abs2(roots[best]))
      pairs.emplace_back(i, best);
    else
      pairs.emplace_back(best, i);
  }
  return pairs;
}

RootSet complex_roots(const TrigPoly& f_eps, unsigned delta, std::uint64_t seed,
                      unsigned max_bits) {
  RootSet out;
  out.precision = delta;
  int d = f_eps.degree();
  if (d == 0) return out;
  ComplexPoly g = circle_numerator(f_eps);
  if (g.degree() != 2 * d) throw std::invalid_argument("degenerate numerator");

  // rounding grid: fine enough for the accuracy contract and the root radius
  unsigned abs_bits = delta + 6;
  {
    double lead = rough_abs(g.c[g.degree()]);
    double b = 0;
    for (int j = 0; j < g.degree(); ++j) b = std::max(b, rough_abs(g.c[j]) / lead);
    abs_bits += static_cast<unsigned>(std::ceil(std::log2(b + 2)));
  }

  // The worst-case separation bound is astronomically pessimistic on benign
  // inputs, so it is consulted only when rounded roots actually collide; the
  // distinctness and pairing checks below are what correctness rests on.
  std::optional<Rational> sep;

  std::vector<GaussianRational> warm;
  unsigned attempt = 0;
  mpfr_prec_t w = std::max<mpfr_prec_t>(2 * delta, 64);
  while (w <= static_cast<mpfr_prec_t>(max_bits)) {
    AberthResult r = aberth_once(g, w, abs_bits, seed + attempt, warm);
    ++attempt;
    if (!r.converged) {
      warm.clear();  // fresh start with different jitter at higher precision
      w *= 2;
      continue;
    }
    warm = r.roots;
    if (!residuals_ok(g, r.roots, delta)) {
      w *= 2;
      continue;
    }
    bool distinct = true;
    for (size_t i = 0; i < r.roots.size() && distinct; ++i)
      for (size_t j = i + 1; j < r.roots.size(); ++j)
        if (r.roots[i] == r.roots[j]) {
          distinct = false;
          break;
        }
    if (!distinct) {
      if (!sep) sep = separation_lower_bound(g);
      long need = *sep > 0 ? 2 - floor_log2_abs(*sep)
                           : static_cast<long>(max_bits) + 1;
      if (static_cast<long>(abs_bits) < need) {
        // grid provably too coarse for this root cluster: refine it
        if (need > static_cast<long>(max_bits))
          throw PrecisionExhausted("separation bound exceeds the precision cap");
        abs_bits = static_cast<unsigned>(
            std::min<long>(need, 2 * static_cast<long>(abs_bits)));
      } else {
        // grid already finer than the proven separation, so the iteration
        // itself collapsed two roots; restart it from scratch
        warm.clear();
        w *= 2;
      }
      continue;
    }
    try {
      out.pairing = pair_reciprocal(r.roots, delta);
    } catch (const PairingFailed&) {
      w *= 2;
      continue;
    }
    out.roots = std::move(r.roots);
    return out;
  }
  throw PrecisionExhausted("root refinement exceeded the precision cap");
}

}  // namespace sohs
