#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sohs/certify.hpp"
#include "sohs/errors.hpp"
#include "sohs/serialize.hpp"

using namespace sohs;

namespace {
GaussianRational gr(long re, long im) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("canonical text form round-trips") {
  TrigPoly f(Rational(5), {gr(1, 1)});
  std::string text = to_text(f);
  CHECK(text == "5 + (1+1i)*z^-1 + (1-1i)*z^1");
  CHECK(trig_from_text(text) == f);

  TrigPoly g(Rational(3), {gr(1, 0), gr(0, 0), GaussianRational(Rational(-1, 2), Rational(3, 4))});
  CHECK(trig_from_text(to_text(g)) == g);

  CHECK(to_text(TrigPoly()) == "0");
  CHECK(trig_from_text("0") == TrigPoly());
}

TEST_CASE("text accepts bare powers, rationals, and loose spacing") {
  TrigPoly zz(Rational(0), {gr(1, 0)});
  CHECK(trig_from_text("z + z^-1") == zz);
  CHECK(trig_from_text("z^-1+z^1") == zz);
  CHECK(trig_from_text("  z\n+ z^-1 ") == zz);

  CHECK(trig_from_text("-2") == TrigPoly(Rational(-2)));
  CHECK(trig_from_text("3/2") == TrigPoly(Rational(3, 2)));
  CHECK(trig_from_text("1/2*z^-1 + 1/2*z") ==
        TrigPoly(Rational(0), {GaussianRational(Rational(1, 2), Rational(0))}));
  CHECK(trig_from_text("5 - z^-1 - z") == TrigPoly(Rational(5), {gr(-1, 0)}));
  CHECK(trig_from_text("(2i)*z^-2 + (-2i)*z^2 + 1") ==
        TrigPoly(Rational(1), {gr(0, 0), gr(0, 2)}));
}

TEST_CASE("one-sided coefficients imply their mirror") {
  CHECK(trig_from_text("4 + (1+1i)*z^-1") ==
        trig_from_text("4 + (1+1i)*z^-1 + (1-1i)*z^1"));
  CHECK(trig_from_text("4 + (1-1i)*z^1") ==
        trig_from_text("4 + (1+1i)*z^-1"));
}

TEST_CASE("text rejections carry a position") {
  CHECK_THROWS_AS(trig_from_text(""), ParseError);
  CHECK_THROWS_AS(trig_from_text("3 + "), ParseError);
  CHECK_THROWS_AS(trig_from_text("3 % z"), ParseError);
  CHECK_THROWS_AS(trig_from_text("z^"), ParseError);
  CHECK_THROWS_AS(trig_from_text("(1+1i"), ParseError);
  // non-conjugate pair
  CHECK_THROWS_AS(trig_from_text("(1+1i)*z^-1 + (1+1i)*z^1"), ParseError);
  // imaginary constant term
  CHECK_THROWS_AS(trig_from_text("(1+1i)"), ParseError);
  try {
    trig_from_text("5 +\n$");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2:1") != std::string::npos);
  }
}

TEST_CASE("trig JSON round-trips bit-exactly") {
  TrigPoly f(Rational(5, 3), {GaussianRational(Rational(1, 3), Rational(-2, 7)), gr(0, 4)});
  TrigPoly g = trig_from_json(trig_to_json(f));
  CHECK(g == f);
  CHECK(trig_from_any(trig_to_json(f)) == f);
  CHECK(trig_from_any(to_text(f)) == f);
  CHECK_THROWS_AS(trig_from_json("{\"f0\": \"1\"}"), ParseError);
  CHECK_THROWS_AS(trig_from_json("not json"), ParseError);
  CHECK_THROWS_AS(
      trig_from_json("{\"d\": 3, \"f0\": \"1\", \"coeffs\": []}"), ParseError);
}

TEST_CASE("certificates of every kind round-trip bit-exactly") {
  TrigPoly f(Rational(5), {gr(1, 1)});
  SohsCertificate c1 = csos1(f, 16);
  SohsCertificate c2 = csos2(f);
  SohsCertificate c3 = csos3(f);
  for (const SohsCertificate& c : {c1, c2, c3}) {
    SohsCertificate back = certificate_from_json(certificate_to_json(c));
    CHECK(back == c);
    CHECK(verify(f, back).accepted);
  }
  CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
  std::string tampered = certificate_to_json(c1);
  tampered.replace(tampered.find("roots"), 5, "fancy");
  CHECK_THROWS_AS(certificate_from_json(tampered), ParseError);
}
