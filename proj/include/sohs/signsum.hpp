#pragma once

#include <vector>

#include "sohs/rational.hpp"

namespace sohs {

enum class Sign { negative = -1, zero = 0, positive = 1, undecided = 2 };

// Sign of r - sum_i sqrt(q[i]). Decided by interval square roots with outward
// rounding at doubling precision from 64 bits; exact zero is reported only when
// every q[i] is a perfect rational square. Returns undecided once the working
// precision would exceed max_bits.
Sign sign_of_root_sum(const Rational& r, const std::vector<Rational>& q,
                      unsigned max_bits = 1u << 20);

}  // namespace sohs
