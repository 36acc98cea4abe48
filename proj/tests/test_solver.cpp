#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tq/random_quads.hpp"
#include "tq/solver.hpp"

using namespace tq;
using oracle::close_abs;
using oracle::close_pt;
using oracle::close_rel;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

GeneralParams random_general(Xoshiro256pp& rng, double lo = 1.05) {
  double X = std::exp(3.0 * (rng.uniform() - 0.5));
  double Y = std::exp(3.0 * (rng.uniform() - 0.5));
  if (X * Y <= lo) Y = lo / X * (1.0 + rng.uniform());
  double L = lo + 2.5 * rng.uniform();
  return GeneralParams::make(X, Y, L);
}

}  // namespace

TEST_CASE("t3_from_identity") {
  CHECK(close_abs(t3_from_identity(1, 1, 1), 1.0, 1e-15));
  CHECK(close_abs(t3_from_identity(0.75, 6.0 / 7.0, 6.0 / 7.0), 15.0 / 8.0,
                  1e-14));
  double t3 = t3_from_identity(1.0, 1.0, 1 + kSqrt2);
  double lhs = 1 + 1 + t3 + (1 + kSqrt2);
  double rhs = 1 * 1 * t3 + 1 * 1 * (1 + kSqrt2) + 1 * t3 * (1 + kSqrt2) +
               1 * t3 * (1 + kSqrt2);
  CHECK(close_rel(lhs, rhs, 1e-12));
  CHECK_THROWS_AS((void)t3_from_identity(0.2, 0.2, 0.2), Error);
}

TEST_CASE("solve_general on the F1 tangents") {
  auto [p, diag] = solve_general({0.75, 6.0 / 7.0, 15.0 / 8.0, 6.0 / 7.0});
  CHECK(close_abs(diag.a_coef, 1.5, 1e-13));
  CHECK(close_abs(diag.b_coef, 1.5, 1e-13));
  CHECK(close_abs(diag.c_coef, 2.5, 1e-13));
  CHECK(close_abs(p.X, 2.0, 1e-12));
  CHECK(close_abs(p.Y, 2.0, 1e-12));
  CHECK(close_abs(p.L, 2.0, 1e-12));
  for (bool f : diag.feasibility) CHECK(f);
}

TEST_CASE("solve_general rejects the square (rhombus limit)") {
  CHECK_THROWS_AS((void)solve_general({1, 1, 1, 1}), Error);
  try {
    (void)solve_general({1, 1, 1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfeasibleAngles);
  }
}

TEST_CASE("property: solve_general round trip") {
  Xoshiro256pp rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    GeneralParams p = random_general(rng);
    auto [got, diag] = solve_general(tangents_from_params(p));
    REQUIRE(close_rel(got.X, p.X, 1e-9));
    REQUIRE(close_rel(got.Y, p.Y, 1e-9));
    REQUIRE(close_rel(got.L, p.L, 1e-9));
    REQUIRE(diag.a_coef + diag.b_coef > 0.0);
    REQUIRE(diag.c_coef > 2.0);
    REQUIRE(got.X * got.Y > 1.0);
    REQUIRE(got.L > 1.0);
  }
}

TEST_CASE("solve_trapezoid") {
  TrapezoidParams a = solve_trapezoid(0, 1);
  CHECK(close_abs(a.X, 1.0, 1e-15));
  CHECK(close_abs(a.Y, 1.0, 1e-15));
  CHECK(close_abs(a.L, 1 + kSqrt2, 1e-14));

  TrapezoidParams b = solve_trapezoid(-1, 1);
  CHECK(close_abs(b.Y, kSqrt2 - 1, 1e-14));
  CHECK(close_abs(b.L, 3 + 2 * kSqrt2, 1e-13));

  CHECK_THROWS_AS((void)solve_trapezoid(0, 0), Error);
  try {
    (void)solve_trapezoid(0.5, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SlopeOrder);
  }

  Xoshiro256pp rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    double m = 6.0 * (rng.uniform() - 0.5);
    double p = m + 0.05 + 3.0 * rng.uniform();
    TrapezoidParams tp = solve_trapezoid(m, p);
    CHECK(tp.L > 1.0);
    // the canonical legs reproduce the requested slopes
    CHECK(close_abs((tp.Y * tp.Y - 1) / (2 * tp.Y), m, 1e-10 * (1 + std::abs(m))));
    double yl = tp.Y * tp.L;
    CHECK(close_abs((yl * yl - 1) / (2 * yl), p, 1e-10 * (1 + std::abs(p))));
  }
}

TEST_CASE("normalize: F1 under all cyclic shifts") {
  ConvexQuad f1 = canonical_quad(GeneralParams::make(2, 2, 2));
  for (int shift = 0; shift < 4; ++shift) {
    std::array<Point2, 4> vs;
    for (int i = 0; i < 4; ++i) vs[i] = f1[i + shift];
    NormalizedModel m = normalize(ConvexQuad::from_vertices(vs));
    REQUIRE(m.kind.tag == QuadClass::Tag::General);
    CHECK(close_rel(m.general().X, 2.0, 1e-9));
    CHECK(close_rel(m.general().Y, 2.0, 1e-9));
    CHECK(close_rel(m.general().L, 2.0, 1e-9));
    CHECK(m.relabel_offset == (4 - shift) % 4);
    CHECK(close_pt(*m.anchor_o, {0, 0}, 1e-9));
    CHECK(close_pt(*m.anchor_p, {1, 0}, 1e-9));
  }
}

TEST_CASE("normalize: rotated and scaled trapezoid") {
  ConvexQuad f3 = canonical_quad(TrapezoidParams::make(1, 1, 1 + kSqrt2));
  double ang = std::numbers::pi / 6;
  Similarity s{5 * std::cos(ang), 5 * std::sin(ang), {3, -2}};
  ConvexQuad moved = apply_similarity(s, f3);

  NormalizedModel m = normalize(moved);
  REQUIRE(m.kind.tag == QuadClass::Tag::Trapezoid);
  CHECK(close_abs(m.trapezoid().X, 1.0, 1e-12));
  CHECK(close_rel(m.trapezoid().Y, 1.0, 1e-9));
  CHECK(close_rel(m.trapezoid().L, 1 + kSqrt2, 1e-9));
  CHECK(close_rel(m.placement.scale(), 5.0, 1e-9));
  CHECK(close_abs(m.placement.rotation(), ang, 1e-9));
  CHECK(close_pt(m.placement.t, {3, -2}, 1e-8));
}

TEST_CASE("normalize: square routes to the rhombus path") {
  ConvexQuad sq = ConvexQuad::from_vertices({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
  NormalizedModel m = normalize(sq);
  CHECK(m.kind.tag == QuadClass::Tag::Rhombus);
  CHECK(std::holds_alternative<std::monostate>(m.params));
  CHECK(close_abs(m.placement.scale(), 1.0, 1e-15));
}

TEST_CASE("normalize rejects non-tangential input") {
  ConvexQuad rect = ConvexQuad::from_vertices({{{0, 0}, {2, 0}, {2, 1}, {0, 1}}});
  CHECK_THROWS_AS((void)normalize(rect), Error);
}

TEST_CASE("property: exactly one feasible relabeling") {
  auto quads = random_tangential(53, 10000);
  for (const ConvexQuad& q : quads) {
    if (classify(q).tag != QuadClass::Tag::General) continue;
    HalfAngleTangents tg = half_angle_tangents(q);
    double t[4] = {tg.t1, tg.t2, tg.t3, tg.t4};
    int feasible = 0;
    for (int o = 0; o < 4; ++o) {
      double t1 = t[o], t2 = t[(o + 1) & 3], t4 = t[(o + 3) & 3];
      if (1 - t1 * t2 > 0 && 1 - t1 * t4 > 0 &&
          t1 * t2 + t1 * t4 + t2 * t4 - 1 > 0)
        ++feasible;
    }
    REQUIRE(feasible == 1);
  }
}

TEST_CASE("property: normalize inverts canonical_quad") {
  Xoshiro256pp rng(59);
  for (int trial = 0; trial < 1000; ++trial) {
    GeneralParams p = random_general(rng);
    NormalizedModel m = normalize(canonical_quad(p));
    REQUIRE(m.kind.tag == QuadClass::Tag::General);
    REQUIRE(close_rel(m.general().X, p.X, 1e-9));
    REQUIRE(close_rel(m.general().Y, p.Y, 1e-9));
    REQUIRE(close_rel(m.general().L, p.L, 1e-9));
    REQUIRE(m.relabel_offset == 0);
  }
  for (int trial = 0; trial < 300; ++trial) {
    double X = std::exp(2.0 * (rng.uniform() - 0.5));
    double Y = std::exp(2.0 * (rng.uniform() - 0.5));
    double L = 1.05 + 2.0 * rng.uniform();
    TrapezoidParams p = TrapezoidParams::make(X, Y, L);
    NormalizedModel m = normalize(canonical_quad(p));
    REQUIRE(m.kind.tag == QuadClass::Tag::Trapezoid);
    REQUIRE(close_rel(m.trapezoid().Y, p.Y, 1e-9));
    REQUIRE(close_rel(m.trapezoid().L, p.L, 1e-9));
    REQUIRE(close_rel(m.placement.scale(), p.X, 1e-9));  // X folds into scale
  }
}

TEST_CASE("property: normalize is similarity invariant") {
  Xoshiro256pp rng(61);
  auto quads = random_tangential(67, 300);
  for (const ConvexQuad& q : quads) {
    NormalizedModel base = normalize(q);
    Similarity s = oracle::random_similarity(rng);
    NormalizedModel moved = normalize(apply_similarity(s, q));
    REQUIRE(base.kind.tag == moved.kind.tag);
    if (base.kind.tag == QuadClass::Tag::General) {
      CHECK(close_rel(base.general().X, moved.general().X, 1e-8));
      CHECK(close_rel(base.general().Y, moved.general().Y, 1e-8));
      CHECK(close_rel(base.general().L, moved.general().L, 1e-8));
    }
  }
}

TEST_CASE("normalize reproduces the relabeled input vertices") {
  auto quads = random_tangential(71, 200);
  for (const ConvexQuad& q : quads) {
    NormalizedModel m = normalize(q);
    if (m.kind.tag == QuadClass::Tag::Rhombus) continue;
    ConvexQuad canon = m.kind.tag == QuadClass::Tag::General
                           ? canonical_quad(m.general())
                           : canonical_quad(m.trapezoid());
    double diam = diameter(q);
    for (int i = 0; i < 4; ++i) {
      Point2 img = apply_similarity(m.placement, canon[i]);
      REQUIRE(dist(img, q[i + m.relabel_offset]) <= 1e-8 * diam);
    }
  }
}
