#include "sohs/signsum.hpp"

#include <stdexcept>

namespace sohs {

Sign sign_of_root_sum(const Rational& r, const std::vector<Rational>& q, unsigned max_bits) {
  std::vector<Rational> terms;
  terms.reserve(q.size());
  bool all_square = true;
  Rational exact_sum(0);
  for (const Rational& qi : q) {
    if (sgn(qi) < 0) throw std::invalid_argument("sign_of_root_sum: negative radicand");
    if (qi == 0) continue;
    terms.push_back(qi);
    Rational root;
    if (all_square && is_perfect_square(qi, &root))
      exact_sum += root;
    else
      all_square = false;
  }
  if (terms.empty()) {
    int s = sgn(r);
    return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
  }
  if (all_square) {
    int s = sgn(Rational(r - exact_sum));
    return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
  }
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    Rational lo(0), hi(0);
    for (const Rational& qi : terms) {
      RatBounds b = sqrt_enclosure(qi, bits);
      lo += b.lo;
      hi += b.hi;
    }
    if (r > hi) return Sign::positive;
    if (r < lo) return Sign::negative;
  }
  return Sign::undecided;
}

}  // namespace sohs
