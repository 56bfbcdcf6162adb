#include "sohs/gaussian.hpp"

namespace sohs {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = abs2(o);
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r *= b;
}
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r /= b;
}
bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}
bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }

Rational abs2(const GaussianRational& x) { return x.re * x.re + x.im * x.im; }

long height(const GaussianRational& x) { return std::max(height(x.re), height(x.im)); }

GaussianRational round_dyadic(const GaussianRational& x, unsigned bits) {
  return {round_dyadic(x.re, bits), round_dyadic(x.im, bits)};
}

std::string to_string(const GaussianRational& x) {
  if (x.im == 0) return to_string(x.re);
  std::string s = "(" + to_string(x.re);
  s += (sgn(x.im) < 0) ? "-" : "+";
  Rational ai = abs(x.im);
  s += to_string(ai) + "i)";
  return s;
}

}  // namespace sohs
