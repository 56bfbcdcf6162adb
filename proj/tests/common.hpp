#pragma once

#include <doctest.h>

#include <random>

#include "sohs/gaussian.hpp"
#include "sohs/rational.hpp"

namespace sohs::test {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long num_mag, long den_mag) {
  std::uniform_int_distribution<long> num(-num_mag, num_mag);
  std::uniform_int_distribution<long> den(1, den_mag);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonneg_rational(Rng& rng, long num_mag, long den_mag) {
  std::uniform_int_distribution<long> num(0, num_mag);
  std::uniform_int_distribution<long> den(1, den_mag);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline GaussianRational random_gaussian(Rng& rng, long num_mag, long den_mag) {
  return {random_rational(rng, num_mag, den_mag), random_rational(rng, num_mag, den_mag)};
}

}  // namespace sohs::test
