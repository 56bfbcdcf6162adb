#include "sohs/interval.hpp"

#include <algorithm>

namespace sohs {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval operator*(const Rational& c, const RatInterval& a) {
  if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

bool overlap(const RatInterval& a, const RatInterval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

RatInterval divide(const RatInterval& a, const RatInterval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::invalid_argument("division by interval containing zero");
  Rational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval sqrt_outward(const RatInterval& a, unsigned bits) {
  Rational lo = a.lo < 0 ? Rational(0) : a.lo;
  RatBounds bl = sqrt_enclosure(lo, bits);
  RatBounds bh = sqrt_enclosure(a.hi < 0 ? Rational(0) : a.hi, bits);
  return {bl.lo, bh.hi};
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval conj(const ComplexInterval& a) { return {a.re, -a.im}; }

DyadicInterval to_dyadic(const RatInterval& a, unsigned bits) {
  Rational c = round_dyadic(a.mid(), bits);
  Rational r1 = abs(a.hi - c), r2 = abs(c - a.lo);
  Rational r = std::max(r1, r2);
  // round the radius up to the dyadic grid
  Rational rd = round_dyadic(r, bits);
  if (rd < r) rd += pow2(-static_cast<long>(bits));
  return {c, rd};
}

}  // namespace sohs
