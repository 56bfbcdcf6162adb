#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include <algorithm>

#include "sohs/mpfloat.hpp"
#include "sohs/roots.hpp"

using namespace sohs;
using test::Rng;

namespace {

GaussianRational gr(long re, long im) { return {Rational(re), Rational(im)}; }

bool close(const Rational& x, const RatBounds& target, const Rational& tol) {
  return x >= target.lo - tol && x <= target.hi + tol;
}

void check_residuals(const ComplexPoly& g, const RootSet& rs, unsigned delta) {
  Rational norm2(0);
  for (const auto& c : g.c) norm2 += abs2(c);
  int m = g.degree();
  for (const auto& r : rs.roots) {
    Rational grow = std::max(abs2(r), Rational(1));
    CHECK(abs2(g.eval(r)) <=
          pow2(2 - 2 * static_cast<long>(delta)) * norm2 * pow_rational(grow, m));
  }
}

}  // namespace

TEST_CASE("circle_numerator coefficient layout") {
  TrigPoly f(Rational(1), {GaussianRational(Rational(1, 4))});
  ComplexPoly g = circle_numerator(f);
  REQUIRE(g.degree() == 2);
  CHECK(g.c[0] == GaussianRational(Rational(1, 4)));
  CHECK(g.c[1] == GaussianRational(1));
  CHECK(g.c[2] == GaussianRational(Rational(1, 4)));

  TrigPoly h(Rational(4), {gr(1, 1)});
  ComplexPoly gh = circle_numerator(h);
  REQUIRE(gh.degree() == 2);
  CHECK(gh.c[0] == gr(1, 1));
  CHECK(gh.c[1] == gr(4, 0));
  CHECK(gh.c[2] == gr(1, -1));
}

TEST_CASE("roots of a real quadratic with known factorization") {
  // g = z^2/4 + z + 1/4, roots -2 +- sqrt(3)
  TrigPoly f(Rational(1), {GaussianRational(Rational(1, 4))});
  RootSet rs = complex_roots(f, 32);
  REQUIRE(rs.roots.size() == 2);
  REQUIRE(rs.pairing.size() == 1);
  RatBounds s3 = sqrt_enclosure(Rational(3), 64);
  Rational tol = pow2(-28);
  auto [pi, qi] = rs.pairing[0];
  const GaussianRational& big = rs.roots[pi];
  const GaussianRational& small = rs.roots[qi];
  CHECK(close(big.re, {-2 - s3.hi, -2 - s3.lo}, tol));
  CHECK(close(small.re, {-2 + s3.lo, -2 + s3.hi}, tol));
  CHECK(abs(big.im) <= tol);
  CHECK(abs(small.im) <= tol);
  CHECK(abs2(big) > abs2(small));  // primary has larger modulus
  CHECK(abs2(big * conj(small) - GaussianRational(1)) <= pow2(-32));
  check_residuals(circle_numerator(f), rs, 32);
}

TEST_CASE("roots of the Gaussian-coefficient reference input") {
  // f = 4 + (1+i)z^-1 + (1-i)z; true roots (-2 +- sqrt(2)) (1+i)/2
  TrigPoly f(Rational(4), {gr(1, 1)});
  RootSet rs = complex_roots(f, 16);
  REQUIRE(rs.roots.size() == 2);
  REQUIRE(rs.pairing.size() == 1);
  RatBounds s2 = sqrt_enclosure(Rational(2), 64);
  Rational tol = pow2(-12);
  auto [pi, qi] = rs.pairing[0];
  const GaussianRational& big = rs.roots[pi];
  const GaussianRational& small = rs.roots[qi];
  // components of the outer root are -(2+sqrt 2)/2 ~ -1.7071
  RatBounds outer{-(2 + s2.hi) / 2, -(2 + s2.lo) / 2};
  RatBounds inner{-(2 - s2.lo) / 2, -(2 - s2.hi) / 2};
  std::swap(inner.lo, inner.hi);
  CHECK(close(big.re, outer, tol));
  CHECK(close(big.im, outer, tol));
  CHECK(close(small.re, inner, tol));
  CHECK(close(small.im, inner, tol));
  CHECK(abs2(big * conj(small) - GaussianRational(1)) <= pow2(-16));
  check_residuals(circle_numerator(f), rs, 16);
}

TEST_CASE("constant input yields an empty root set") {
  RootSet rs = complex_roots(TrigPoly(Rational(2)), 16);
  CHECK(rs.roots.empty());
  CHECK(rs.pairing.empty());
}

TEST_CASE("separation lower bound") {
  // z^2 - 1: bound sqrt(3)/(4 sqrt(2)) ~ 0.306, true separation 2
  ComplexPoly g({gr(-1, 0), gr(0, 0), gr(1, 0)});
  Rational b = separation_lower_bound(g);
  CHECK(b > 0);
  CHECK(b <= Rational(307, 1000));
  CHECK(b > Rational(29, 100));

  CHECK(separation_lower_bound(ComplexPoly({gr(0, 0), gr(1, 0)})) == 0);

  // scaling halves the bound through the norm: 2z^2 + 2 has |g|_2 = 2 sqrt 2
  ComplexPoly h({gr(2, 0), gr(0, 0), gr(2, 0)});
  Rational bh = separation_lower_bound(h);
  CHECK(bh > Rational(15, 100));
  CHECK(bh <= Rational(154, 1000));
}

TEST_CASE("pair_reciprocal rejects unmatched sets") {
  CHECK_THROWS_AS(pair_reciprocal({gr(2, 0), gr(3, 0)}, 16), PairingFailed);
  CHECK_THROWS_AS(pair_reciprocal({gr(2, 0)}, 16), PairingFailed);
  CHECK(pair_reciprocal({}, 16).empty());
}

TEST_CASE("pair_reciprocal is insensitive to input order") {
  TrigPoly f(Rational(10), {gr(1, 1), gr(0, 1), gr(2, -1)});
  RootSet rs = complex_roots(f, 24);
  REQUIRE(rs.roots.size() == 6);
  auto value_pairs = [&](const std::vector<GaussianRational>& roots,
                         const std::vector<std::pair<int, int>>& pr) {
    std::vector<std::pair<GaussianRational, GaussianRational>> v;
    for (auto [a, b] : pr) v.emplace_back(roots[a], roots[b]);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      if (x.first.re != y.first.re) return x.first.re < y.first.re;
      return x.first.im < y.first.im;
    });
    return v;
  };
  auto base = value_pairs(rs.roots, rs.pairing);
  std::vector<GaussianRational> shuffled = rs.roots;
  Rng rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto pr = pair_reciprocal(shuffled, 24);
    CHECK(value_pairs(shuffled, pr) == base);
  }
}

TEST_CASE("random positive inputs: residuals, pairing, circle avoidance") {
  Rng rng(61);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 12; ++i) {
    int d = deg(rng);
    ComplexPoly s;
    for (int k = 0; k <= d; ++k) s.c.push_back(test::random_gaussian(rng, 6, 3));
    s.trim();
    if (s.degree() < 1) continue;
    TrigPoly f = mul_star(s);
    f.f0 += 1 + test::random_nonneg_rational(rng, 4, 2);
    unsigned delta = 24;
    RootSet rs = complex_roots(f, delta, 7 + i);
    int dd = f.degree();
    REQUIRE(static_cast<int>(rs.roots.size()) == 2 * dd);
    REQUIRE(static_cast<int>(rs.pairing.size()) == dd);
    check_residuals(circle_numerator(f), rs, delta);
    for (auto [a, b] : rs.pairing) {
      CHECK(abs2(rs.roots[a]) >= abs2(rs.roots[b]));
      CHECK(abs2(rs.roots[a] * conj(rs.roots[b]) - GaussianRational(1)) <=
            pow2(-static_cast<long>(delta)));
    }
    // no approximation sits on the unit circle
    for (const auto& r : rs.roots) CHECK(abs2(r) != 1);
  }
}

TEST_CASE("identical seeds reproduce the root set") {
  TrigPoly f(Rational(6), {gr(1, 1), gr(1, 0)});
  RootSet a = complex_roots(f, 20, 42);
  RootSet b = complex_roots(f, 20, 42);
  CHECK(a.roots == b.roots);
  CHECK(a.pairing == b.pairing);
}

TEST_CASE("circle samples enclose true values") {
  TrigPoly f(Rational(5), {gr(1, 1)});
  auto samples = eval_circle(f, 4, 48);
  REQUIRE(samples.size() == 4);
  // theta = 0 and pi give exactly 7 and 3
  CHECK(samples[0].as_interval().contains(Rational(7)));
  CHECK(samples[2].as_interval().contains(Rational(3)));
  CHECK(samples[0].radius <= pow2(-40));
  auto one = eval_circle(TrigPoly(Rational(1)), 3, 32);
  for (const auto& s : one) CHECK(s.as_interval().contains(Rational(1)));
}

TEST_CASE("trig enclosures") {
  RatInterval c = cos_pi_ratio(Rational(1, 3), 64);  // cos(pi/3) = 1/2
  CHECK(c.contains(Rational(1, 2)));
  CHECK(c.width() <= pow2(-64));
  RatInterval s = sin_pi_ratio(Rational(1, 2), 64);
  CHECK(s.contains(Rational(1)));
  RatInterval z = sin_pi_ratio(Rational(1), 80);
  CHECK(z.contains(Rational(0)));
  CHECK(z.width() <= pow2(-80));
  RatInterval p = pi_enclosure(64);
  CHECK(p.lo > Rational(333, 106));  // continued-fraction bracket of pi
  CHECK(p.hi < Rational(355, 113));
  CHECK(p.width() <= pow2(-64));
  RatInterval neg = cos_pi_ratio(Rational(-1, 3), 64);
  CHECK(neg.contains(Rational(1, 2)));
}
