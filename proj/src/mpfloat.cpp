#include "sohs/mpfloat.hpp"

#include <stdexcept>

namespace sohs {

namespace {

// cos/sin of an exact angle pi*pq with directed outward rounding.  The angle
// itself is enclosed first; since |d cos| <= 1 and |d sin| <= 1, padding each
// endpoint value by the angle-interval width gives a rigorous hull even when
// an extremum falls inside.
RatInterval trig_pi_ratio(const Rational& pq, unsigned bits, bool want_sin) {
  mpfr_prec_t w = bits + 64;
  BigFloat pi_lo(w), pi_hi(w), a_lo(w), a_hi(w), t(w);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_set_q(t.get(), pq.get_mpq_t(), MPFR_RNDD);
  if (pq >= 0) {
    mpfr_mul(a_lo.get(), pi_lo.get(), t.get(), MPFR_RNDD);
    mpfr_set_q(t.get(), pq.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(a_hi.get(), pi_hi.get(), t.get(), MPFR_RNDU);
  } else {
    mpfr_mul(a_lo.get(), pi_hi.get(), t.get(), MPFR_RNDD);
    mpfr_set_q(t.get(), pq.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(a_hi.get(), pi_lo.get(), t.get(), MPFR_RNDU);
  }
  BigFloat v1(w), v2(w), v3(w), v4(w);
  if (want_sin) {
    mpfr_sin(v1.get(), a_lo.get(), MPFR_RNDD);
    mpfr_sin(v2.get(), a_lo.get(), MPFR_RNDU);
    mpfr_sin(v3.get(), a_hi.get(), MPFR_RNDD);
    mpfr_sin(v4.get(), a_hi.get(), MPFR_RNDU);
  } else {
    mpfr_cos(v1.get(), a_lo.get(), MPFR_RNDD);
    mpfr_cos(v2.get(), a_lo.get(), MPFR_RNDU);
    mpfr_cos(v3.get(), a_hi.get(), MPFR_RNDD);
    mpfr_cos(v4.get(), a_hi.get(), MPFR_RNDU);
  }
  Rational lo = std::min(rational_from_big(v1.get()), rational_from_big(v3.get()));
  Rational hi = std::max(rational_from_big(v2.get()), rational_from_big(v4.get()));
  Rational pad = rational_from_big(a_hi.get()) - rational_from_big(a_lo.get());
  lo -= pad;
  hi += pad;
  if (lo < -1) lo = -1;
  if (hi > 1) hi = 1;
  return {lo, hi};
}

}  // namespace

BigFloat big_from_rational(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.get(), x.get_mpq_t(), rnd);
  return r;
}

Rational rational_from_big(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw std::invalid_argument("non-finite value");
  Int m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  Rational r(m);
  if (e > 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else if (e < 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

RatInterval pi_enclosure(unsigned bits) {
  BigFloat lo(bits + 16), hi(bits + 16);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {rational_from_big(lo.get()), rational_from_big(hi.get())};
}

RatInterval cos_pi_ratio(const Rational& pq, unsigned bits) {
  return trig_pi_ratio(pq, bits, false);
}

RatInterval sin_pi_ratio(const Rational& pq, unsigned bits) {
  return trig_pi_ratio(pq, bits, true);
}

std::vector<DyadicInterval> eval_circle(const TrigPoly& f, int n, unsigned bits) {
  if (n < 1) throw std::invalid_argument("need at least one sample");
  std::vector<DyadicInterval> out;
  out.reserve(n);
  int d = f.degree();
  for (int j = 0; j < n; ++j) {
    RatInterval acc(f.f0);
    for (int k = 1; k <= d; ++k) {
      // f_k z^-k + conj(f_k) z^k = 2(Re f_k cos k theta + Im f_k sin k theta)
      Rational angle(2l * j * k, n);
      angle.canonicalize();
      const GaussianRational& fk = f.c[k - 1];
      acc = acc + (2 * fk.real()) * cos_pi_ratio(angle, bits + 8) +
            (2 * fk.imag()) * sin_pi_ratio(angle, bits + 8);
    }
    out.push_back(to_dyadic(acc, bits));
  }
  return out;
}

}  // namespace sohs
