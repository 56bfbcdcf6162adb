#pragma once

// Laurent/trigonometric polynomials on the unit circle with Gaussian
// rational coefficients.
//
// A TrigPoly stores f(z) = f0 + sum_{k=1..d} (f_k z^-k + conj(f_k) z^k)
// with f0 real; such f is real-valued on |z| = 1.  A ComplexPoly is an
// ordinary univariate polynomial s(z) = sum_k s_k z^k used for the factors
// of a Hermitian square s s*, where s*(z) = sum_k conj(s_k) z^-k.

#include <optional>
#include <string>
#include <vector>

#include "sohs/gaussian.hpp"

namespace sohs {

struct ComplexPoly {
  std::vector<GaussianRational> c;  // c[k] multiplies z^k

  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<GaussianRational> coeffs) : c(std::move(coeffs)) {
    trim();
  }

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  GaussianRational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : GaussianRational(0);
  }
  GaussianRational eval(const GaussianRational& z) const;
};

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(const GaussianRational& s, const ComplexPoly& a);
inline bool operator==(const ComplexPoly& a, const ComplexPoly& b) {
  return a.c == b.c;
}

struct TrigPoly {
  Rational f0;                       // constant coefficient (real)
  std::vector<GaussianRational> c;   // c[k-1] multiplies z^-k, k = 1..d

  TrigPoly() : f0(0) {}
  explicit TrigPoly(Rational constant) : f0(std::move(constant)) {}
  TrigPoly(Rational constant, std::vector<GaussianRational> upper)
      : f0(std::move(constant)), c(std::move(upper)) {
    trim();
  }

  void trim();
  int degree() const { return static_cast<int>(c.size()); }
  bool is_zero() const { return f0 == 0 && c.empty(); }

  // Coefficient of z^k for any integer k (positive k returns the conjugate).
  GaussianRational coeff(int k) const;

  // Value at a point of the circle given as z (assumed |z| = 1 so that
  // z^-1 = conj(z)); returns the real value f0 + 2 sum Re(conj(f_k) z^k).
  Rational eval_on_circle(const GaussianRational& z) const;

  long height() const;
};

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator*(const Rational& s, const TrigPoly& a);
bool operator==(const TrigPoly& a, const TrigPoly& b);

// f - c as a trig poly (shifts the constant coefficient only).
TrigPoly sub_const(const TrigPoly& f, const Rational& c);

// Conjugate-reflected polynomial: entry k of the result multiplies z^-k.
// An involution on the coefficient data.
ComplexPoly star(const ComplexPoly& s);

// The Hermitian square s s^* of an ordinary polynomial, as a TrigPoly:
// coefficient of z^-k is sum_j s_j conj(s_{j+k}).
TrigPoly mul_star(const ComplexPoly& s);

// Sum of Hermitian squares sum_j s_j s_j^*.
TrigPoly sohs_value(const std::vector<ComplexPoly>& parts);

}  // namespace sohs
