#include "sohs/circle.hpp"

#include <algorithm>

#include "sohs/errors.hpp"

namespace sohs {

namespace {

// Integer polynomials, constant term first.
using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int ideg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

Int icontent(const IPoly& p) {
  Int g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;  // 0 for the zero polynomial
}

void make_primitive(IPoly& p) {
  Int g = icontent(p);
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IPoly ideriv(const IPoly& p) {
  IPoly d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(Int(long(k)) * p[k]);
  itrim(d);
  return d;
}

// Pseudo-remainder of a by b, scaled by an even power of lc(b) so that the
// result equals rem(a, b) times a positive rational factor.
IPoly sprem(IPoly a, const IPoly& b) {
  int db = ideg(b);
  const Int& lb = b.back();
  int e = ideg(a) - db + 1;
  if (e % 2 != 0) ++e;
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), e);
  for (auto& c : a) c *= scale;
  while (ideg(a) >= db) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    int shift = ideg(a) - db;
    for (int i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    itrim(a);
  }
  return a;
}

IPoly igcd(IPoly a, IPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (ideg(a) < ideg(b)) std::swap(a, b);
  while (!b.empty()) {
    IPoly r = sprem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact quotient a / b when b divides a (used for square-free reduction).
IPoly idiv_exact(const IPoly& a, const IPoly& b) {
  std::vector<Rational> rem(a.begin(), a.end());
  int db = ideg(b);
  Rational lb(b.back());
  std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    Rational c = rem[i] / lb;
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  IPoly out;
  out.reserve(q.size());
  for (auto& c : q) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("inexact polynomial division");
    out.push_back(c.get_num());
  }
  itrim(out);
  return out;
}

// Scale rational coefficients to a primitive integer polynomial (same roots).
IPoly clear_denominators(const std::vector<Rational>& q) {
  Int lcm(1);
  for (const auto& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  IPoly p;
  p.reserve(q.size());
  for (const auto& c : q) p.push_back(Int(c.get_num() * (lcm / c.get_den())));
  itrim(p);
  make_primitive(p);
  return p;
}

int sign_at_plus_inf(const IPoly& p) { return sgn(p.back()); }

int sign_at_minus_inf(const IPoly& p) {
  int s = sgn(p.back());
  return (ideg(p) % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Sturm chain of a square-free primitive integer polynomial.
std::vector<IPoly> sturm_chain(const IPoly& q) {
  std::vector<IPoly> chain{q, ideriv(q)};
  itrim(chain.back());
  while (!chain.back().empty() && ideg(chain.back()) >= 0) {
    const IPoly& a = chain[chain.size() - 2];
    const IPoly& b = chain.back();
    if (ideg(b) < 0) break;
    IPoly r = sprem(a, b);
    for (auto& c : r) c = -c;
    make_primitive(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
    if (ideg(chain.back()) == 0) break;
  }
  return chain;
}

int root_count_squarefree(const IPoly& q) {
  auto chain = sturm_chain(q);
  std::vector<int> at_minus, at_plus;
  for (const auto& p : chain) {
    at_minus.push_back(sign_at_minus_inf(p));
    at_plus.push_back(sign_at_plus_inf(p));
  }
  return variations(at_minus) - variations(at_plus);
}

}  // namespace

int sturm_real_root_count(const std::vector<Rational>& q) {
  IPoly p = clear_denominators(q);
  if (p.empty()) throw std::invalid_argument("zero polynomial");
  if (ideg(p) == 0) return 0;
  IPoly g = igcd(p, ideriv(p));
  if (ideg(g) > 0) {
    p = idiv_exact(p, g);
    make_primitive(p);
  }
  if (ideg(p) == 0) return 0;
  return root_count_squarefree(p);
}

bool has_real_root_on_circle(const BivarPoly& p) {
  if (p.is_zero()) return true;
  if (p.eval(Rational(-1), Rational(0)) == 0) return true;
  std::vector<Rational> q = half_angle_numerator(p);
  if (q.empty()) return true;  // vanishes identically along the circle
  if (static_cast<int>(q.size()) == 1) return false;
  return sturm_real_root_count(q) > 0;
}

bool is_positive_on_circle(const TrigPoly& f) {
  if (f.is_zero()) return false;
  if (f.eval_on_circle(GaussianRational(1)) <= 0) return false;
  return !has_real_root_on_circle(to_real_bivariate(f));
}

Rational find_epsilon(const TrigPoly& f, unsigned max_halvings) {
  BivarPoly p = to_real_bivariate(f);
  if (f.eval_on_circle(GaussianRational(1)) <= 0 || has_real_root_on_circle(p))
    throw NotPositiveOnCircle("input vanishes or is negative somewhere on the circle");
  // p - eps only shifts the constant term, so the half-angle numerator is
  // q_p - eps * (1 + t^2)^D; build both once.
  std::vector<Rational> qp = half_angle_numerator(p);
  int D = p.total_degree();
  std::vector<Rational> w(2 * D + 1, Rational(0));
  {
    // (1 + t^2)^D by repeated multiplication
    std::vector<Rational> acc{Rational(1)};
    for (int k = 0; k < D; ++k) {
      std::vector<Rational> nxt(acc.size() + 2, Rational(0));
      for (size_t i = 0; i < acc.size(); ++i) {
        nxt[i] += acc[i];
        nxt[i + 2] += acc[i];
      }
      acc = std::move(nxt);
    }
    for (size_t i = 0; i < acc.size(); ++i) w[i] = acc[i];
  }
  qp.resize(std::max(qp.size(), w.size()), Rational(0));
  Rational eps(1);
  for (unsigned it = 0; it <= max_halvings; ++it) {
    std::vector<Rational> q = qp;
    for (size_t i = 0; i < w.size(); ++i) q[i] -= eps * w[i];
    while (!q.empty() && q.back() == 0) q.pop_back();
    bool root = false;
    // special point (-1, 0): x = -1, y = 0
    if (p.eval(Rational(-1), Rational(0)) - eps == 0) root = true;
    if (!root) {
      if (q.empty())
        root = true;
      else if (q.size() > 1)
        root = sturm_real_root_count(q) > 0;
    }
    if (!root) return eps;
    eps /= 2;
  }
  throw IterationCap("epsilon search exceeded the halving cap");
}

}  // namespace sohs
