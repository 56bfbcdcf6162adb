#pragma once

// Independent reference implementations used only by the test suite.  These
// favour transparency over speed: every decision is made by exact integer
// arithmetic obtained from repeated squaring, never by floating point.

#include <optional>
#include <stdexcept>
#include <vector>

#include "sohs/bivar.hpp"
#include "sohs/rational.hpp"

namespace sohs::test {

// Sign of A + B*sqrt(m) for rational A, B and rational m > 0.
inline int sign_lin_rad(const Rational& A, const Rational& B, const Rational& m) {
  if (B == 0) return sign(A);
  if (B > 0) {
    if (A >= 0) return 1;
    // A < 0: compare B*sqrt(m) against |A|.
    return sign(B * B * m - A * A);
  }
  // B < 0.
  if (A <= 0) return -1;
  return sign(A * A - B * B * m);
}

// Sign of r - sqrt(a), a >= 0.
inline int oracle_sign1(const Rational& r, const Rational& a) {
  if (a == 0) return sign(r);
  if (r < 0) return -1;
  return sign(r * r - a);
}

// Sign of r - sqrt(a) - sqrt(b), a, b > 0.
inline int oracle_sign2(const Rational& r, const Rational& a, const Rational& b) {
  if (r <= 0) return -1;
  // r > 0: sign of r^2 - (a + b) - 2 sqrt(ab).
  return sign_lin_rad(r * r - a - b, Rational(-2), a * b);
}

// Sign of r - sqrt(a) - sqrt(b) - sqrt(c), a, b, c > 0.
inline int oracle_sign3(const Rational& r, const Rational& a, const Rational& b,
                        const Rational& c) {
  // L := r - sqrt(a) - sqrt(b).  If L <= 0 the total is negative outright.
  int sL = oracle_sign2(r, a, b);
  if (sL <= 0) return -1;
  // L > 0: sign of L^2 - c.  Expanding,
  //   L^2 - c = (r^2 + a + b - c) + 2 sqrt(ab) - 2r sqrt(a) - 2r sqrt(b).
  // Compare P := rho + 2 sqrt(ab) against N := 2r (sqrt(a) + sqrt(b)) > 0.
  Rational rho = r * r + a + b - c;
  int sP = sign_lin_rad(rho, Rational(2), a * b);
  if (sP <= 0) return -1;
  // Both sides positive: sign(P - N) = sign(P^2 - N^2).
  //   P^2 = rho^2 + 4ab + 4 rho sqrt(ab)
  //   N^2 = 4r^2 (a + b) + 8r^2 sqrt(ab)
  return sign_lin_rad(rho * rho + 4 * a * b - 4 * r * r * (a + b), 4 * rho - 8 * r * r,
                      a * b);
}

// Exact sign of r - sum_i sqrt(q_i) for up to three nonzero radicands.
inline int oracle_sign_root_sum(const Rational& r, std::vector<Rational> q) {
  std::vector<Rational> nz;
  for (const auto& v : q) {
    if (v < 0) throw std::invalid_argument("negative radicand");
    if (v > 0) nz.push_back(v);
  }
  switch (nz.size()) {
    case 0:
      return sign(r);
    case 1:
      return oracle_sign1(r, nz[0]);
    case 2:
      return oracle_sign2(r, nz[0], nz[1]);
    case 3:
      return oracle_sign3(r, nz[0], nz[1], nz[2]);
    default:
      throw std::invalid_argument("oracle handles at most three radicands");
  }
}

// ---------------------------------------------------------------------------
// Circle-root oracle: exact rational sampling of p on the unit circle.
//
// Two closed parameter charts cover the circle: (x,y) = ((1-s^2)/(1+s^2),
// 2s/(1+s^2)) for s in [-1,1] (right half) and ((s^2-1)/(1+s^2), 2s/(1+s^2))
// for s in [-1,1] (left half, with s = 0 giving the point (-1,0)).  An exact
// zero or a sign change between adjacent samples proves a root.  Absence of
// roots is certified from the Lipschitz bound |dp/dtheta| <= sum |c_ij| (i+j)
// together with |dtheta/ds| <= 2; ambiguous cells are subdivided.

class CircleRootOracle {
 public:
  explicit CircleRootOracle(const BivarPoly& p) : p_(p) {
    for (const auto& row : p.coeff)
      for (const auto& v : row) lip_ += (v < 0 ? -v : v);
    int td = p.total_degree();
    lip_ *= td > 0 ? td : 0;
  }

  // nullopt = undecided at the given refinement depth (should not happen on
  // generic inputs).
  std::optional<bool> has_root(int grid = 256, int max_depth = 24) const {
    bool undecided = false;
    for (int chart = 0; chart < 2; ++chart) {
      for (int j = 0; j < grid; ++j) {
        Rational a = Rational(2 * j, grid) - 1;
        Rational b = Rational(2 * (j + 1), grid) - 1;
        auto r = decide_cell(chart, a, b, max_depth);
        if (!r.has_value()) {
          undecided = true;
          continue;
        }
        if (*r) return true;
      }
    }
    if (undecided) return std::nullopt;
    return false;
  }

  Rational value_at(int chart, const Rational& s) const {
    Rational den = 1 + s * s;
    Rational x = (1 - s * s) / den;
    if (chart == 1) x = -x;
    return p_.eval(x, 2 * s / den);
  }

 private:
  std::optional<bool> decide_cell(int chart, const Rational& a, const Rational& b,
                                  int depth) const {
    Rational va = value_at(chart, a);
    Rational vb = value_at(chart, b);
    if (va == 0 || vb == 0) return true;
    if (sign(va) != sign(vb)) return true;
    // no root in the cell if min |p| beats the Lipschitz slack 2 * lip * (b-a)/2
    Rational slack = lip_ * (b - a);
    Rational m = va < 0 ? -va : va;
    Rational mb = vb < 0 ? -vb : vb;
    if (mb < m) m = mb;
    if (m > slack) return false;
    if (depth == 0) return std::nullopt;
    Rational mid = (a + b) / 2;
    auto left = decide_cell(chart, a, mid, depth - 1);
    if (left.has_value() && *left) return true;
    auto right = decide_cell(chart, mid, b, depth - 1);
    if (right.has_value() && *right) return true;
    if (left.has_value() && right.has_value()) return false;
    return std::nullopt;
  }

  BivarPoly p_;
  Rational lip_;
};

}  // namespace sohs::test
