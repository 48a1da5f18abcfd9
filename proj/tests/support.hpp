#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "curvball/patch.hpp"
#include "curvball/vec3.hpp"

namespace curvball::testing {

// Seeded draws for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vec3 unitVector() {
    while (true) {
      const Vec3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const double n = norm(v);
      if (n > 0.1 && n <= 1.0) return v / n;
    }
  }

  ParamPoint interior(const ParamDomain& d, double margin = 0.02) {
    return d.at(uniform(margin, 1.0 - margin), uniform(margin, 1.0 - margin));
  }

  RigidMotion motion() {
    RigidMotion m = RigidMotion::rotationAbout(unitVector(), uniform(-3.1, 3.1));
    m.translation = {uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace curvball::testing
