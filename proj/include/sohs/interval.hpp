#pragma once

#include "sohs/gaussian.hpp"
#include "sohs/rational.hpp"

namespace sohs {

struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rational& v) : lo(v), hi(v) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool strictly_positive() const { return sgn(lo) > 0; }
  bool strictly_negative() const { return sgn(hi) < 0; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rational& c, const RatInterval& a);
bool overlap(const RatInterval& a, const RatInterval& b);

// a / b for a denominator interval that excludes zero.
RatInterval divide(const RatInterval& a, const RatInterval& b);

// sqrt of a nonnegative interval, outward rounded, enclosure width <= 2^-bits extra
RatInterval sqrt_outward(const RatInterval& a, unsigned bits);

struct ComplexInterval {
  RatInterval re, im;

  ComplexInterval() = default;
  ComplexInterval(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
  ComplexInterval(const GaussianRational& v) : re(v.re), im(v.im) {}
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval conj(const ComplexInterval& a);

// Interval with dyadic center/radius; the carrier for adaptive-precision evaluation.
struct DyadicInterval {
  Rational center, radius;  // dyadic; radius >= 0

  RatInterval as_interval() const { return {center - radius, center + radius}; }
};

// Outward-rounded dyadic hull at 2^-bits granularity.
DyadicInterval to_dyadic(const RatInterval& a, unsigned bits);

}  // namespace sohs
