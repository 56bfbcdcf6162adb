#pragma once

// Bivariate rational polynomials p(x, y), used to express a trig polynomial
// as a function on the real circle x^2 + y^2 = 1.

#include <vector>

#include "sohs/poly.hpp"
#include "sohs/rational.hpp"

namespace sohs {

struct BivarPoly {
  // coeff[i][j] multiplies x^i y^j; rows may have different lengths.
  std::vector<std::vector<Rational>> coeff;

  Rational get(int i, int j) const;
  void add_to(int i, int j, const Rational& v);
  void trim();
  bool is_zero() const;
  int total_degree() const;  // -1 for the zero polynomial
  Rational eval(const Rational& x, const Rational& y) const;
};

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(const Rational& s, const BivarPoly& a);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

BivarPoly sub_const(const BivarPoly& p, const Rational& c);

// p(x, y) = f(x + iy) with z^-1 read as x - iy; real coefficients, agrees
// with f on the circle.
BivarPoly to_real_bivariate(const TrigPoly& f);

// q(t) = (1 + t^2)^D p((1-t^2)/(1+t^2), 2t/(1+t^2)) with D the total degree;
// coefficients from constant term upward.  For the zero polynomial returns {}.
std::vector<Rational> half_angle_numerator(const BivarPoly& p);

}  // namespace sohs
