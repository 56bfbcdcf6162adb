#pragma once

// Thin RAII wrapper around MPFR plus the handful of rigorous enclosures the
// exact layers need (values of trig polynomials on the circle, cos/sin of
// rational multiples of pi).  Every MPFR value is a dyadic rational, so
// conversions back to Rational are exact.

#include <mpfr.h>

#include <vector>

#include "sohs/interval.hpp"
#include "sohs/poly.hpp"
#include "sohs/rational.hpp"

namespace sohs {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

BigFloat big_from_rational(const Rational& x, mpfr_prec_t prec,
                           mpfr_rnd_t rnd = MPFR_RNDN);

// Exact value of a finite MPFR number.
Rational rational_from_big(mpfr_srcptr x);

// Enclosures of pi, cos(pi p/q) and sin(pi p/q), width below 2^-bits.
RatInterval pi_enclosure(unsigned bits);
RatInterval cos_pi_ratio(const Rational& pq, unsigned bits);
RatInterval sin_pi_ratio(const Rational& pq, unsigned bits);

// Enclosures of f(e^{i theta_j}) at theta_j = 2 pi j / n, j = 0..n-1.
std::vector<DyadicInterval> eval_circle(const TrigPoly& f, int n, unsigned bits = 64);

}  // namespace sohs
