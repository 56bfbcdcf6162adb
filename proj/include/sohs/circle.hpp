#pragma once

// Exact decision "does p(x, y) vanish somewhere on the unit circle?" and the
// epsilon-halving search built on it.  The circle is rationalized by the
// tangent half-angle substitution x = (1-t^2)/(1+t^2), y = 2t/(1+t^2); the
// point (-1, 0) missed by the substitution is checked separately.  Real roots
// of the resulting univariate polynomial are counted with a Sturm chain kept
// in primitive integer form.

#include <vector>

#include "sohs/bivar.hpp"
#include "sohs/poly.hpp"
#include "sohs/rational.hpp"

namespace sohs {

// Number of distinct real roots of q (coefficients from constant term up).
// q must be nonzero.
int sturm_real_root_count(const std::vector<Rational>& q);

bool has_real_root_on_circle(const BivarPoly& p);

bool is_positive_on_circle(const TrigPoly& f);

// First epsilon in 1, 1/2, 1/4, ... with f - epsilon still positive on the
// circle.  Throws NotPositiveOnCircle unless f itself is positive there;
// IterationCap after max_halvings unsuccessful halvings.
Rational find_epsilon(const TrigPoly& f, unsigned max_halvings = 1u << 16);

}  // namespace sohs
