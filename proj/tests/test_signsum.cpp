#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"
#include "oracles.hpp"

#include "sohs/signsum.hpp"

using namespace sohs;
using test::Rng;

static int to_int(Sign s) {
  REQUIRE(s != Sign::undecided);
  return static_cast<int>(s);
}

TEST_CASE("worked examples") {
  CHECK(sign_of_root_sum(Rational(1), {Rational(8, 3249)}) == Sign::positive);
  CHECK(sign_of_root_sum(Rational(0), {}) == Sign::zero);
  CHECK(sign_of_root_sum(Rational(3), {Rational(4), Rational(4)}) == Sign::negative);
}

TEST_CASE("exact zero is recognized when radicands are perfect squares") {
  CHECK(sign_of_root_sum(Rational(5), {Rational(4), Rational(9)}) == Sign::zero);
  CHECK(sign_of_root_sum(Rational(2, 3), {Rational(4, 9)}) == Sign::zero);
  CHECK(sign_of_root_sum(Rational(7, 2), {Rational(1, 4), Rational(9), Rational(0)}) ==
        Sign::zero);
}

TEST_CASE("zero radicands are ignored") {
  CHECK(sign_of_root_sum(Rational(-1), {Rational(0), Rational(0)}) == Sign::negative);
  CHECK(sign_of_root_sum(Rational(1, 1000000), {Rational(0)}) == Sign::positive);
}

TEST_CASE("negative radicand is rejected") {
  CHECK_THROWS_AS(sign_of_root_sum(Rational(1), {Rational(-1)}), std::invalid_argument);
}

TEST_CASE("near-tie decisions are correct") {
  // 665857/470832 is a continued-fraction convergent of sqrt(2); the gap is ~1e-12.
  Rational conv(665857, 470832);
  CHECK(to_int(sign_of_root_sum(conv, {Rational(2)})) ==
        test::oracle_sign1(conv, Rational(2)));
  // sqrt(2) + sqrt(3) vs a convergent of it
  Rational conv2(1143850, 363638);
  CHECK(to_int(sign_of_root_sum(conv2, {Rational(2), Rational(3)})) ==
        test::oracle_sign2(conv2, Rational(2), Rational(3)));
}

TEST_CASE("agrees with the squaring oracle on random inputs") {
  Rng rng(29);
  std::uniform_int_distribution<int> nrad(0, 3);
  for (int i = 0; i < 500; ++i) {
    Rational r = test::random_rational(rng, 255, 255);
    std::vector<Rational> q;
    int n = nrad(rng);
    for (int j = 0; j < n; ++j) q.push_back(test::random_nonneg_rational(rng, 255, 255));
    int expect = test::oracle_sign_root_sum(r, q);
    CHECK(to_int(sign_of_root_sum(r, q)) == expect);
  }
}

TEST_CASE("sums engineered to vanish") {
  // r = sqrt(a) + sqrt(b) exactly, with a, b squares of rationals
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Rational x = test::random_nonneg_rational(rng, 100, 50);
    Rational y = test::random_nonneg_rational(rng, 100, 50);
    CHECK(sign_of_root_sum(x + y, {x * x, y * y}) == Sign::zero);
    CHECK(sign_of_root_sum(x + y + 1, {x * x, y * y}) == Sign::positive);
    if (x + y > 0) CHECK(sign_of_root_sum(x + y - 1, {x * x, y * y}) != Sign::positive);
  }
}
