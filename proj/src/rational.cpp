#include "sohs/rational.hpp"

#include <cctype>

#include "sohs/errors.hpp"

namespace sohs {

long height(const Int& a) {
  if (a == 0) return 1;
  Int t = abs(a);
  return static_cast<long>(mpz_sizeinbase(t.get_mpz_t(), 2));
}

long height(const Rational& x) {
  if (x == 0) return 1;
  return height(Int(x.get_num())) + height(Int(x.get_den()));
}

int sign(const Rational& x) { return sgn(x); }

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw ParseError("bad character in rational literal: '" + s + "'");
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("unparsable rational literal: '" + s + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw ParseError("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_dyadic(const Rational& x) {
  Int d = x.get_den();
  if (d == 1) return true;
  size_t low = mpz_scan1(d.get_mpz_t(), 0);
  return mpz_sizeinbase(d.get_mpz_t(), 2) == low + 1;
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

Rational pow_rational(const Rational& x, long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

long floor_log2_abs(const Rational& x) {
  Int p = abs(Int(x.get_num()));
  Int q = x.get_den();
  long e = height(p) - height(q);
  // 2^e <= |x| < 2^(e+1) after at most two adjustments
  auto cmp_pow = [&](long k) {
    // compare |x| with 2^k
    Int lhs = p, rhs = q;
    if (k >= 0)
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(k));
    else
      mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-k));
    return cmp(lhs, rhs);
  };
  while (cmp_pow(e) < 0) --e;
  while (cmp_pow(e + 1) >= 0) ++e;
  return e;
}

Rational round_dyadic(const Rational& x, unsigned bits) {
  Rational scaled = x;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits);
  Int p = scaled.get_num(), q = scaled.get_den();
  Int k, r;
  mpz_fdiv_qr(k.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Int twice_r = r * 2;
  int c = cmp(twice_r, q);
  if (c > 0 || (c == 0 && k < 0)) k += 1;  // ties toward zero
  Rational out(k);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Rational round_significand_toward_zero(const Rational& x, unsigned sig) {
  if (x == 0 || sig == 0) return Rational(0);
  long e = floor_log2_abs(x);
  long shift = static_cast<long>(sig) - 1 - e;  // |x|*2^shift in [2^(sig-1), 2^sig)
  Rational scaled = abs(x);
  if (shift >= 0)
    mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<unsigned long>(shift));
  else
    mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<unsigned long>(-shift));
  Int m;
  mpz_fdiv_q(m.get_mpz_t(), mpz_class(scaled.get_num()).get_mpz_t(),
             mpz_class(scaled.get_den()).get_mpz_t());
  Rational out(m);
  if (shift >= 0)
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(shift));
  else
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(-shift));
  if (sgn(x) < 0) out = -out;
  return out;
}

RatBounds sqrt_enclosure(const Rational& x, unsigned bits) {
  if (x == 0) return {Rational(0), Rational(0)};
  Int n = x.get_num(), d = x.get_den();
  // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits so the enclosure width is 1/(d*2^bits)
  Int nd = n * d;
  mpz_mul_2exp(nd.get_mpz_t(), nd.get_mpz_t(), 2UL * bits);
  Int s, rem;
  mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), nd.get_mpz_t());
  Int denom = d;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  Rational lo(s, denom);
  lo.canonicalize();
  if (rem == 0) return {lo, lo};
  Rational hi(s + 1, denom);
  hi.canonicalize();
  return {lo, hi};
}

Rational sqrt_round_down_sig(const Rational& x, unsigned sig) {
  if (x == 0) return Rational(0);
  Int n = x.get_num(), d = x.get_den();
  long bn = height(n), bd = height(d);
  long want = 2L * static_cast<long>(sig) + 4;
  long t = (want - bn + bd + 1) / 2;
  if (t < 0) t = 0;
  Int scaled = n;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * static_cast<unsigned long>(t));
  Int m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  Int r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  Rational out(r);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(t));
  return round_significand_toward_zero(out, sig);
}

bool is_perfect_square(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  if (x == 0) {
    if (root) *root = 0;
    return true;
  }
  Int n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root) {
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    *root = r;
  }
  return true;
}

}  // namespace sohs
