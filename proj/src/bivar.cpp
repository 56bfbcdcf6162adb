#include "sohs/bivar.hpp"

#include <algorithm>

namespace sohs {

Rational BivarPoly::get(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(coeff.size())) return Rational(0);
  const auto& row = coeff[i];
  if (j < 0 || j >= static_cast<int>(row.size())) return Rational(0);
  return row[j];
}

void BivarPoly::add_to(int i, int j, const Rational& v) {
  if (i >= static_cast<int>(coeff.size())) coeff.resize(i + 1);
  auto& row = coeff[i];
  if (j >= static_cast<int>(row.size())) row.resize(j + 1, Rational(0));
  row[j] += v;
}

void BivarPoly::trim() {
  for (auto& row : coeff)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!coeff.empty() && coeff.back().empty()) coeff.pop_back();
}

bool BivarPoly::is_zero() const {
  for (const auto& row : coeff)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (int i = 0; i < static_cast<int>(coeff.size()); ++i)
    for (int j = 0; j < static_cast<int>(coeff[i].size()); ++j)
      if (coeff[i][j] != 0) d = std::max(d, i + j);
  return d;
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  Rational xi(1);
  for (const auto& row : coeff) {
    Rational yj(1);
    Rational rowacc(0);
    for (const auto& v : row) {
      rowacc += v * yj;
      yj *= y;
    }
    acc += xi * rowacc;
    xi *= x;
  }
  return acc;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (int i = 0; i < static_cast<int>(b.coeff.size()); ++i)
    for (int j = 0; j < static_cast<int>(b.coeff[i].size()); ++j)
      r.add_to(i, j, b.coeff[i][j]);
  r.trim();
  return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (int i = 0; i < static_cast<int>(b.coeff.size()); ++i)
    for (int j = 0; j < static_cast<int>(b.coeff[i].size()); ++j)
      r.add_to(i, j, -b.coeff[i][j]);
  r.trim();
  return r;
}

BivarPoly operator*(const Rational& s, const BivarPoly& a) {
  BivarPoly r = a;
  for (auto& row : r.coeff)
    for (auto& v : row) v *= s;
  r.trim();
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (int i = 0; i < static_cast<int>(a.coeff.size()); ++i)
    for (int j = 0; j < static_cast<int>(a.coeff[i].size()); ++j) {
      if (a.coeff[i][j] == 0) continue;
      for (int k = 0; k < static_cast<int>(b.coeff.size()); ++k)
        for (int l = 0; l < static_cast<int>(b.coeff[k].size()); ++l) {
          if (b.coeff[k][l] == 0) continue;
          r.add_to(i + k, j + l, a.coeff[i][j] * b.coeff[k][l]);
        }
    }
  r.trim();
  return r;
}

BivarPoly sub_const(const BivarPoly& p, const Rational& c) {
  BivarPoly r = p;
  r.add_to(0, 0, -c);
  r.trim();
  return r;
}

BivarPoly to_real_bivariate(const TrigPoly& f) {
  BivarPoly p;
  p.add_to(0, 0, f.f0);
  // (x + iy)^k tracked as a real/imaginary pair of bivariate polynomials.
  BivarPoly re, im;
  re.add_to(0, 0, Rational(1));
  BivarPoly x, y;
  x.add_to(1, 0, Rational(1));
  y.add_to(0, 1, Rational(1));
  for (const auto& fk : f.c) {
    BivarPoly nre = x * re - y * im;
    BivarPoly nim = x * im + y * re;
    re = std::move(nre);
    im = std::move(nim);
    // f_k (x-iy)^k + conj(f_k)(x+iy)^k = 2 Re(conj(f_k)(x+iy)^k)
    p = p + 2 * (fk.real() * re) + 2 * (fk.imag() * im);
  }
  p.trim();
  return p;
}

std::vector<Rational> half_angle_numerator(const BivarPoly& p) {
  int D = p.total_degree();
  if (D < 0) return {};
  // powers of (1 - t^2), (2t), (1 + t^2) as univariate coefficient vectors
  auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<std::vector<Rational>> pw_m(D + 1), pw_t(D + 1), pw_p(D + 1);
  pw_m[0] = pw_t[0] = pw_p[0] = {Rational(1)};
  std::vector<Rational> m{Rational(1), Rational(0), Rational(-1)};
  std::vector<Rational> t2{Rational(0), Rational(2)};
  std::vector<Rational> pl{Rational(1), Rational(0), Rational(1)};
  for (int k = 1; k <= D; ++k) {
    pw_m[k] = mul(pw_m[k - 1], m);
    pw_t[k] = mul(pw_t[k - 1], t2);
    pw_p[k] = mul(pw_p[k - 1], pl);
  }
  std::vector<Rational> q(2 * D + 1, Rational(0));
  for (int i = 0; i < static_cast<int>(p.coeff.size()); ++i)
    for (int j = 0; j < static_cast<int>(p.coeff[i].size()); ++j) {
      const Rational& c = p.coeff[i][j];
      if (c == 0) continue;
      auto term = mul(mul(pw_m[i], pw_t[j]), pw_p[D - i - j]);
      for (size_t k = 0; k < term.size(); ++k) q[k] += c * term[k];
    }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace sohs
