#pragma once

// Hand-rolled generators for the property tests.

#include <cstdint>
#include <random>

#include "georeduce/geom2d.hpp"
#include "georeduce/geom3d.hpp"
#include "georeduce/rational.hpp"

namespace georeduce::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long max_num = 50, long max_den = 20) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }
  Rational positive(long max_num = 50, long max_den = 20) {
    return Rational(integer(1, max_num), integer(1, max_den));
  }
  geom2d::Point2 point2() { return {rational(), rational()}; }
  geom3d::Point3 point3() { return {rational(), rational(), rational()}; }
  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace georeduce::testing
