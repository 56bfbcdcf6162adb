#include "sohs/serialize.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <map>
#include <string_view>

#include "sohs/errors.hpp"

namespace sohs {

namespace {

using nlohmann::json;

// ---- text form ----

struct Scanner {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t j = 0; j < i && j < s.size(); ++j) {
      if (s[j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("parse error at " + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + msg);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }

  // digits with an optional /digits tail; the sign is handled by callers
  Rational number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    std::size_t mid = i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == mid + 1) fail("expected digits after '/'");
    }
    return rational_from_string(std::string(s.substr(start, i - start)));
  }

  long integer_exponent() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected an exponent");
    long e = std::stol(std::string(s.substr(start, i - start)));
    return neg ? -e : e;
  }

  // number with optional 'i' suffix, or a bare 'i'
  GaussianRational gauss_part() {
    skip_ws();
    if (i < s.size() && s[i] == 'i') {
      ++i;
      return GaussianRational(Rational(0), Rational(1));
    }
    Rational v = number();
    if (i < s.size() && s[i] == 'i') {
      ++i;
      return GaussianRational(Rational(0), v);
    }
    return GaussianRational(v);
  }

  // sum of signed parts between parentheses: (1+1i), (-1/2+3i), (2i)
  GaussianRational parenthesized() {
    GaussianRational g;
    bool neg = eat('-');
    if (!neg) eat('+');
    GaussianRational p = gauss_part();
    g = neg ? -p : p;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++i;
        p = gauss_part();
        g = (c == '-') ? g - p : g + p;
      } else {
        break;
      }
    }
    if (!eat(')')) fail("expected ')'");
    return g;
  }
};

std::string gauss_to_text(const GaussianRational& g) {
  std::string out = "(" + to_string(g.re);
  out += sign(g.im) < 0 ? "-" : "+";
  Rational m = Rational(abs(g.im));
  out += to_string(m) + "i)";
  return out;
}

// ---- JSON helpers ----

json gauss_to_json(const GaussianRational& g) {
  return json::array({to_string(g.re), to_string(g.im)});
}

GaussianRational gauss_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("expected a [re, im] string pair");
  return {rational_from_string(j.at(0).get<std::string>()),
          rational_from_string(j.at(1).get<std::string>())};
}

json poly_to_json(const ComplexPoly& p) {
  json a = json::array();
  for (const auto& c : p.c) a.push_back(gauss_to_json(c));
  return a;
}

ComplexPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array");
  std::vector<GaussianRational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(gauss_from_json(e));
  return ComplexPoly(std::move(c));
}

}  // namespace

std::string to_text(const TrigPoly& f) {
  if (f.is_zero()) return "0";
  std::string out = to_string(f.f0);
  for (int k = 1; k <= f.degree(); ++k) {
    GaussianRational fk = f.c[k - 1];
    if (fk.is_zero()) continue;
    std::string zneg = "z^-" + std::to_string(k);
    std::string zpos = "z^" + std::to_string(k);
    if (fk.is_real()) {
      std::string sep = sign(fk.re) < 0 ? " - " : " + ";
      std::string mag = to_string(Rational(abs(fk.re)));
      std::string coeff = mag == "1" ? "" : mag + "*";
      out += sep + coeff + zneg + sep + coeff + zpos;
    } else {
      out += " + " + gauss_to_text(fk) + "*" + zneg;
      out += " + " + gauss_to_text(conj(fk)) + "*" + zpos;
    }
  }
  return out;
}

TrigPoly trig_from_text(const std::string& text) {
  Scanner sc{text};
  std::map<long, GaussianRational> terms;
  bool first = true;
  while (!sc.done()) {
    int sgn = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      ++sc.i;
      sgn = c == '-' ? -1 : 1;
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    GaussianRational coeff(1);
    bool have_coeff = false;
    c = sc.peek();
    if (c == '(') {
      ++sc.i;
      coeff = sc.parenthesized();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
      coeff = sc.gauss_part();
      have_coeff = true;
    }

    long k = 0;
    sc.eat('*');
    if (sc.peek() == 'z') {
      ++sc.i;
      k = 1;
      sc.skip_ws();
      if (sc.i < sc.s.size() && sc.s[sc.i] == '^') {
        ++sc.i;
        k = sc.integer_exponent();
      }
    } else if (!have_coeff) {
      sc.fail("expected a coefficient or a power of z");
    }
    if (sgn < 0) coeff = -coeff;
    terms[k] += coeff;
  }
  if (terms.empty()) throw ParseError("parse error at 1:1: empty polynomial");

  GaussianRational f0 = terms.count(0) ? terms[0] : GaussianRational(0);
  if (!f0.is_real()) throw ParseError("constant coefficient must be real");
  long d = 0;
  for (const auto& [k, v] : terms)
    if (!v.is_zero()) d = std::max(d, std::abs(k));
  std::vector<GaussianRational> coeffs(d, GaussianRational(0));
  for (long k = 1; k <= d; ++k) {
    bool lo = terms.count(-k) && !terms[-k].is_zero();
    bool hi = terms.count(k) && !terms[k].is_zero();
    if (lo && hi && terms[-k] != conj(terms[k]))
      throw ParseError("coefficients of z^-" + std::to_string(k) + " and z^" +
                       std::to_string(k) + " are not conjugate");
    if (lo)
      coeffs[k - 1] = terms[-k];
    else if (hi)
      coeffs[k - 1] = conj(terms[k]);
  }
  return TrigPoly(f0.re, std::move(coeffs));
}

std::string trig_to_json(const TrigPoly& f) {
  json j;
  j["d"] = f.degree();
  j["f0"] = to_string(f.f0);
  json coeffs = json::array();
  for (const auto& c : f.c) coeffs.push_back(gauss_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j.dump(2);
}

TrigPoly trig_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Rational f0 = rational_from_string(j.at("f0").get<std::string>());
    std::vector<GaussianRational> coeffs;
    for (const auto& e : j.at("coeffs")) coeffs.push_back(gauss_from_json(e));
    if (j.contains("d") && j.at("d").get<long>() !=
                               static_cast<long>(coeffs.size()))
      throw ParseError("degree field disagrees with the coefficient count");
    return TrigPoly(std::move(f0), std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

TrigPoly trig_from_any(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? trig_from_json(text) : trig_from_text(text);
  }
  throw ParseError("parse error at 1:1: empty polynomial");
}

std::string certificate_to_json(const SohsCertificate& cert) {
  json j;
  j["kind"] = to_string(cert.kind);
  j["epsilon"] = to_string(cert.epsilon);
  j["a"] = to_string(cert.a);
  j["u0"] = to_string(cert.u0);
  json u = json::array();
  for (const auto& uk : cert.u) u.push_back(gauss_to_json(uk));
  j["u"] = std::move(u);
  json alphas = json::array();
  for (const auto& al : cert.alphas) alphas.push_back(gauss_to_json(al));
  j["alphas"] = std::move(alphas);
  json squares = json::array();
  for (const auto& s : cert.squares) squares.push_back(poly_to_json(s));
  j["squares"] = std::move(squares);
  json weights = json::array();
  for (const auto& w : cert.weights) weights.push_back(to_string(w));
  j["weights"] = std::move(weights);
  j["meta"] = {{"delta", cert.meta.delta},
               {"R", to_string(cert.meta.R)},
               {"delta_c", cert.meta.delta_c},
               {"delta_hat", cert.meta.delta_hat}};
  return j.dump(2);
}

SohsCertificate certificate_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    SohsCertificate cert;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "roots")
      cert.kind = CertKind::roots;
    else if (kind == "sdp-compensated")
      cert.kind = CertKind::sdp_compensated;
    else if (kind == "projected")
      cert.kind = CertKind::projected;
    else
      throw ParseError("unknown certificate kind: " + kind);
    cert.epsilon = rational_from_string(j.at("epsilon").get<std::string>());
    cert.a = rational_from_string(j.at("a").get<std::string>());
    cert.u0 = rational_from_string(j.at("u0").get<std::string>());
    for (const auto& e : j.at("u")) cert.u.push_back(gauss_from_json(e));
    for (const auto& e : j.at("alphas")) cert.alphas.push_back(gauss_from_json(e));
    for (const auto& e : j.at("squares")) cert.squares.push_back(poly_from_json(e));
    for (const auto& e : j.at("weights"))
      cert.weights.push_back(rational_from_string(e.get<std::string>()));
    const json& m = j.at("meta");
    cert.meta.delta = m.at("delta").get<unsigned>();
    cert.meta.R = rational_from_string(m.at("R").get<std::string>());
    cert.meta.delta_c = m.at("delta_c").get<unsigned>();
    cert.meta.delta_hat = m.at("delta_hat").get<unsigned>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

}  // namespace sohs
