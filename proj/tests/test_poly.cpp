#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "sohs/poly.hpp"

using namespace sohs;
using test::Rng;

namespace {

// Exact point on the unit circle from the Pythagorean parametrization.
GaussianRational circle_point(const Rational& t) {
  Rational den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

GaussianRational gr(long re, long im) { return {Rational(re), Rational(im)}; }

}  // namespace

TEST_CASE("subtracting a constant shifts only f0") {
  TrigPoly f(Rational(5), {gr(1, 1)});  // 5 + (1+i)z^-1 + (1-i)z
  TrigPoly g = sub_const(f, Rational(1));
  CHECK(g.f0 == 4);
  CHECK(g.c == f.c);
  CHECK((f - f).is_zero());
  TrigPoly h = Rational(1, 2) * TrigPoly(Rational(0), {gr(1, 0)});
  CHECK(h.c[0] == GaussianRational(Rational(1, 2)));
}

TEST_CASE("degree reduces when leading coefficients cancel") {
  TrigPoly f(Rational(1), {gr(2, 0), gr(3, 1)});
  TrigPoly g(Rational(0), {gr(0, 0), gr(3, 1)});
  CHECK((f - g).degree() == 1);
  CHECK(TrigPoly(Rational(0)).degree() == 0);
  CHECK(TrigPoly(Rational(0)).is_zero());
}

TEST_CASE("star is an involution and conjugate-reflects") {
  ComplexPoly s({gr(0, 0) - gr(-2, 0), gr(1, 0)});  // z + 2
  ComplexPoly ss = star(s);
  CHECK(ss.c[0] == gr(2, 0));
  ComplexPoly t({gr(0, 0), gr(0, 0), gr(1, 1)});  // (1+i)z^2
  CHECK(star(t).c[2] == gr(1, -1));
  CHECK(star(star(t)).c == t.c);
}

TEST_CASE("mul_star of a linear factor") {
  // s = z - alpha with alpha = -7/4 - 7/4 i
  GaussianRational alpha(Rational(-7, 4), Rational(-7, 4));
  ComplexPoly s({GaussianRational(0) - alpha, GaussianRational(1)});
  TrigPoly F = mul_star(s);
  CHECK(F.f0 == Rational(57, 8));  // 1 + |alpha|^2
  CHECK(F.degree() == 1);
  CHECK(F.c[0] == GaussianRational(Rational(7, 4), Rational(7, 4)));
  CHECK(F.coeff(-1) == GaussianRational(Rational(7, 4), Rational(7, 4)));
  CHECK(F.coeff(1) == GaussianRational(Rational(7, 4), Rational(-7, 4)));
}

TEST_CASE("mul_star of constants and monomials") {
  CHECK(mul_star(ComplexPoly({gr(1, 0)})) == TrigPoly(Rational(1)));
  CHECK(mul_star(ComplexPoly({gr(0, 0), gr(0, 0), gr(1, 0)})) == TrigPoly(Rational(1)));
  CHECK(mul_star(ComplexPoly{}).is_zero());
}

TEST_CASE("mul_star agrees with |s(z)|^2 at exact circle points") {
  Rng rng(37);
  for (int i = 0; i < 128; ++i) {
    std::uniform_int_distribution<int> deg(0, 5);
    ComplexPoly s;
    int n = deg(rng) + 1;
    for (int j = 0; j < n; ++j) s.c.push_back(test::random_gaussian(rng, 20, 10));
    s.trim();
    TrigPoly F = mul_star(s);
    CHECK(F.f0 >= 0);
    GaussianRational z = circle_point(test::random_rational(rng, 50, 25));
    CHECK(F.eval_on_circle(z) == abs2(s.eval(z)));
  }
}

TEST_CASE("sohs_value sums Hermitian squares") {
  ComplexPoly s1({gr(1, 0), gr(1, 0)});
  ComplexPoly s2({gr(0, 1)});
  TrigPoly F = sohs_value({s1, s2});
  CHECK(F.f0 == 3);
  CHECK(F.c[0] == gr(1, 0));
  GaussianRational z = circle_point(Rational(1, 3));
  CHECK(F.eval_on_circle(z) == abs2(s1.eval(z)) + abs2(s2.eval(z)));
}

TEST_CASE("eval_on_circle matches direct evaluation") {
  TrigPoly f(Rational(5), {gr(1, 1)});
  CHECK(f.eval_on_circle(GaussianRational(1)) == 7);
  CHECK(f.eval_on_circle(GaussianRational(Rational(0), Rational(1))) == 7);
  CHECK(f.eval_on_circle(GaussianRational(-1)) == 3);
  TrigPoly g(Rational(0), {gr(1, 0)});  // z^-1 + z = 2cos
  CHECK(g.eval_on_circle(GaussianRational(-1)) == -2);
}

TEST_CASE("coeff handles out-of-range and zero") {
  TrigPoly f(Rational(2), {gr(1, 2)});
  CHECK(f.coeff(0) == gr(2, 0));
  CHECK(f.coeff(-1) == gr(1, 2));
  CHECK(f.coeff(1) == gr(1, -2));
  CHECK(f.coeff(5).is_zero());
  CHECK(f.coeff(-5).is_zero());
}

TEST_CASE("height of a trig poly") {
  TrigPoly f(Rational(5), {GaussianRational(Rational(1, 57), Rational(0))});
  CHECK(f.height() == 7);
}
