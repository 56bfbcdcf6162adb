#pragma once

// Text and JSON round-trips for polynomials and certificates.  All rationals
// travel as GMP canonical strings ("p" or "p/q"), so serialization is
// bit-exact: parsing what was written reproduces the value.
//
// Text form of a trig polynomial:  5 + (1+1i)*z^-1 + (1-1i)*z^1
// Gaussian coefficients sit in parentheses, plain rationals may stand alone,
// and a bare z power carries coefficient 1.  The z^-k and z^k coefficients
// must be conjugates when both appear; if only one side of a pair is
// written, the other is implied.  Parse errors carry line:column positions.

#include <string>

#include "sohs/certify.hpp"
#include "sohs/poly.hpp"

namespace sohs {

std::string to_text(const TrigPoly& f);
TrigPoly trig_from_text(const std::string& text);

// {"d": int, "f0": "p/q", "coeffs": [["re","im"], ...]}
std::string trig_to_json(const TrigPoly& f);
TrigPoly trig_from_json(const std::string& text);

// Accepts either encoding; JSON when the first non-space character is '{'.
TrigPoly trig_from_any(const std::string& text);

// {"kind": ..., "epsilon": "p/q", "a": "p/q", "u0": "p/q", "u": [["re","im"],...],
//  "alphas": [...], "squares": [[["re","im"],...],...], "weights": ["p/q",...],
//  "meta": {"delta": n, "R": "p/q", "delta_c": n, "delta_hat": n}}
std::string certificate_to_json(const SohsCertificate& cert);
SohsCertificate certificate_from_json(const std::string& text);

}  // namespace sohs
