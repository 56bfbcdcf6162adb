#include "sohs/poly.hpp"

#include <algorithm>

namespace sohs {

void ComplexPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

GaussianRational ComplexPoly::eval(const GaussianRational& z) const {
  GaussianRational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), GaussianRational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), GaussianRational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ComplexPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, GaussianRational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

ComplexPoly operator*(const GaussianRational& s, const ComplexPoly& a) {
  ComplexPoly r = a;
  for (auto& v : r.c) v = s * v;
  r.trim();
  return r;
}

void TrigPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

GaussianRational TrigPoly::coeff(int k) const {
  if (k == 0) return GaussianRational(f0);
  int a = k > 0 ? k : -k;
  if (a > degree()) return GaussianRational(0);
  return k < 0 ? c[a - 1] : conj(c[a - 1]);
}

Rational TrigPoly::eval_on_circle(const GaussianRational& z) const {
  Rational acc = f0;
  GaussianRational zk(1);
  for (const auto& fk : c) {
    zk = zk * z;
    acc += 2 * (conj(fk) * zk).real();
  }
  return acc;
}

long TrigPoly::height() const {
  long h = sohs::height(f0);
  for (const auto& fk : c) h = std::max(h, sohs::height(fk));
  return h;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly r;
  r.f0 = a.f0 + b.f0;
  r.c.resize(std::max(a.c.size(), b.c.size()), GaussianRational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly r;
  r.f0 = a.f0 - b.f0;
  r.c.resize(std::max(a.c.size(), b.c.size()), GaussianRational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

TrigPoly operator*(const Rational& s, const TrigPoly& a) {
  TrigPoly r = a;
  r.f0 *= s;
  for (auto& v : r.c) v = GaussianRational(s) * v;
  r.trim();
  return r;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  return a.f0 == b.f0 && a.c == b.c;
}

TrigPoly sub_const(const TrigPoly& f, const Rational& c) {
  TrigPoly r = f;
  r.f0 -= c;
  return r;
}

ComplexPoly star(const ComplexPoly& s) {
  ComplexPoly r = s;
  for (auto& v : r.c) v = conj(v);
  return r;
}

TrigPoly mul_star(const ComplexPoly& s) {
  TrigPoly r;
  int n = static_cast<int>(s.c.size());
  if (n == 0) return r;
  for (int j = 0; j < n; ++j) r.f0 += abs2(s.c[j]);
  r.c.assign(n - 1, GaussianRational(0));
  for (int k = 1; k < n; ++k)
    for (int j = 0; j + k < n; ++j) r.c[k - 1] += s.c[j] * conj(s.c[j + k]);
  r.trim();
  return r;
}

TrigPoly sohs_value(const std::vector<ComplexPoly>& parts) {
  TrigPoly r;
  for (const auto& s : parts) r = r + mul_star(s);
  return r;
}

}  // namespace sohs
