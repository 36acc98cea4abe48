#include "tq/random_quads.hpp"

#include <cmath>
#include <numbers>

namespace tq {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& w : s_) w = splitmix64(x);
}

std::uint64_t Xoshiro256pp::next() {
  std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::uniform() { return (next() >> 11) * 0x1.0p-53; }

ConvexQuad quad_from_tangent_angles(const std::array<double, 4>& theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::array<Point2, 4> vs;
  for (int i = 0; i < 4; ++i) {
    double gap = theta[(i + 1) % 4] - theta[i];
    if (i == 3) gap += two_pi;
    if (!(gap > 0.0) || !(gap < std::numbers::pi))
      fail(Errc::InvalidParams, "tangent-angle gap outside (0, pi)");
    double mid = theta[i] + 0.5 * gap;
    double r = 1.0 / std::cos(0.5 * gap);
    vs[i] = {r * std::cos(mid), r * std::sin(mid)};
  }
  return ConvexQuad::from_vertices(vs);
}

std::vector<ConvexQuad> random_tangential(std::uint64_t seed, int count,
                                          double min_gap) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (count < 1) fail(Errc::InvalidParams, "count must be >= 1");
  if (!(min_gap > 0.0) || !(4.0 * min_gap < two_pi))
    fail(Errc::GapInfeasible, "need 0 < 4*min_gap < 2*pi");

  Xoshiro256pp rng(seed);
  std::vector<ConvexQuad> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    // Gaps: min_gap plus a Dirichlet split of the slack; reject any gap
    // at or above pi - min_gap (tangent intersections stay finite).
    double e[4], sum = 0.0;
    for (double& x : e) {
      x = -std::log1p(-rng.uniform());
      sum += x;
    }
    double slack = two_pi - 4.0 * min_gap;
    double gap[4];
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      gap[i] = min_gap + slack * e[i] / sum;
      ok = ok && gap[i] < std::numbers::pi - min_gap;
    }
    if (!ok) continue;
    double start = two_pi * rng.uniform();
    std::array<double, 4> theta{start, start + gap[0], start + gap[0] + gap[1],
                                start + gap[0] + gap[1] + gap[2]};
    out.push_back(quad_from_tangent_angles(theta));
  }
  return out;
}

}  // namespace tq
