#pragma once

#include <Eigen/Core>
#include <ostream>
#include <string>

#include "sohs/rational.hpp"

namespace sohs {

struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int n) : re(n), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  const Rational& real() const { return re; }
  const Rational& imag() const { return im; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
bool operator!=(const GaussianRational& a, const GaussianRational& b);

GaussianRational conj(const GaussianRational& x);
Rational abs2(const GaussianRational& x);
inline const Rational& real(const GaussianRational& x) { return x.re; }
inline const Rational& imag(const GaussianRational& x) { return x.im; }

long height(const GaussianRational& x);
GaussianRational round_dyadic(const GaussianRational& x, unsigned bits);
std::string to_string(const GaussianRational& x);
inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}

}  // namespace sohs

namespace Eigen {

template <>
struct NumTraits<sohs::Rational> : GenericNumTraits<sohs::Rational> {
  typedef sohs::Rational Real;
  typedef sohs::Rational NonInteger;
  typedef sohs::Rational Nested;
  typedef sohs::Rational Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

template <>
struct NumTraits<sohs::GaussianRational> : GenericNumTraits<sohs::GaussianRational> {
  typedef sohs::Rational Real;
  typedef sohs::GaussianRational NonInteger;
  typedef sohs::GaussianRational Nested;
  typedef sohs::GaussianRational Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 200,
    MulCost = 400
  };
};

}  // namespace Eigen

namespace sohs {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using GramMatrix = Mat<GaussianRational>;

}  // namespace sohs
