#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tq/geometry.hpp"

namespace tq {

/// xoshiro256++ (Blackman-Vigna public-domain constants), seeded through
/// splitmix64. Deterministic across runs for a fixed seed.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform double in [0, 1), 53 mantissa bits.
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Quadrilateral circumscribed about the unit circle: vertex i is the
/// intersection of the tangent lines at theta[i] and theta[i+1]. Angles
/// must be strictly increasing with every consecutive gap (wrap included)
/// in (0, pi).
ConvexQuad quad_from_tangent_angles(const std::array<double, 4>& theta);

/// Deterministic corpus of tangential quadrilaterals: 4 sorted tangent
/// angles per quad with consecutive gaps in (min_gap, pi - min_gap).
/// Throws GapInfeasible when 4*min_gap >= 2*pi.
std::vector<ConvexQuad> random_tangential(std::uint64_t seed, int count,
                                          double min_gap = 0.15);

}  // namespace tq
