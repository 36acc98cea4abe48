#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tq/dissection.hpp"
#include "tq/random_quads.hpp"

using namespace tq;
using oracle::close_abs;
using oracle::close_pt;
using oracle::close_rel;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

ConvexQuad f1() { return canonical_quad(GeneralParams::make(2, 2, 2)); }
ConvexQuad f2() { return canonical_quad(GeneralParams::make(2, 2, 4)); }
ConvexQuad unit_square() {
  return ConvexQuad::from_vertices({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
}

}  // namespace

TEST_CASE("dissect n=1 is the identity dissection") {
  ConvexQuad q = f1();
  GridDissection d = dissect(q, 1);
  CHECK(close_pt(d.at(0, 0), q[0], 1e-12));
  CHECK(close_pt(d.at(1, 0), q[1], 1e-12));
  CHECK(close_pt(d.at(1, 1), q[2], 1e-12));
  CHECK(close_pt(d.at(0, 1), q[3], 1e-12));
}

TEST_CASE("dissect F2 2x2: the four cell incircles") {
  GridDissection d = dissect(f2(), 2);
  auto radius = [&](int k, int j) {
    return incircle(ConvexQuad::from_vertices(d.cell(k, j))).radius;
  };
  // closed forms at the cell parameters (2,2,2), (4,2,2), (4,4,2), (2,4,2)
  CHECK(close_abs(radius(0, 0), 1.0 / 7.0, 1e-12));
  CHECK(close_abs(radius(1, 0), 4.0 / 45.0, 1e-12));
  CHECK(close_abs(radius(1, 1), 2.0 / 31.0, 1e-12));
  CHECK(close_abs(radius(0, 1), 4.0 / 45.0, 1e-12));
  CHECK(close_abs(inradius_oracle(GeneralParams::make(2, 2, 2)), radius(0, 0),
                  1e-12));
  CHECK(close_abs(inradius_oracle(GeneralParams::make(4, 2, 2)), radius(1, 0),
                  1e-12));
  CHECK(close_abs(inradius_oracle(GeneralParams::make(4, 4, 2)), radius(1, 1),
                  1e-12));
  CHECK(close_abs(inradius_oracle(GeneralParams::make(2, 4, 2)), radius(0, 1),
                  1e-12));
}

TEST_CASE("dissect unit square n=3: nine 1/3 squares") {
  GridDissection d = dissect(unit_square(), 3);
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k)
      CHECK(close_pt(d.at(k, j), {k / 3.0, j / 3.0}, 1e-15));
  CellReport rep = validate(d, 1e-12);
  CHECK(rep.pass);
  CHECK(rep.max_defect <= 1e-15);
}

TEST_CASE("property: lattice nesting between n and 2n") {
  auto quads = random_tangential(73, 20);
  for (const ConvexQuad& q : quads) {
    GridDissection coarse = dissect(q, 3);
    GridDissection fine = dissect(q, 6);
    double diam = diameter(q);
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        REQUIRE(dist(coarse.at(k, j), fine.at(2 * k, 2 * j)) <= 1e-12 * diam);
  }
}

TEST_CASE("property: cells tile the quad area") {
  auto quads = random_tangential(79, 30);
  for (const ConvexQuad& q : quads) {
    GridDissection d = dissect(q, 4);
    double total = 0.0;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) total += oracle::shoelace(d.cell(k, j));
    REQUIRE(close_rel(total, signed_area(ccw(q)), 1e-10));
  }
}

TEST_CASE("property: rows through O, columns through P") {
  Xoshiro256pp rng(83);
  auto quads = random_tangential(89, 20);
  for (const ConvexQuad& q0 : quads) {
    ConvexQuad q = apply_similarity(oracle::random_similarity(rng, 0.5, 2.0), q0);
    GridDissection d = dissect(q, 5);
    if (d.source.kind.tag != QuadClass::Tag::General) continue;
    for (int j = 0; j <= 5; ++j) {
      std::vector<Point2> row{*d.source.anchor_o};
      for (int k = 0; k <= 5; ++k) row.push_back(d.at(k, j));
      REQUIRE(oracle::collin_residual(row) <= 1e-9);
    }
    for (int k = 0; k <= 5; ++k) {
      std::vector<Point2> col{*d.source.anchor_p};
      for (int j = 0; j <= 5; ++j) col.push_back(d.at(k, j));
      REQUIRE(oracle::collin_residual(col) <= 1e-9);
    }
  }
}

TEST_CASE("main theorem sweep: every cell tangential, n = 1..12") {
  auto quads = random_tangential(97, 200);
  for (const ConvexQuad& q : quads)
    for (int n = 1; n <= 12; ++n) {
      CellReport rep = validate(dissect(q, n), 1e-8);
      REQUIRE(rep.pass);
    }
}

TEST_CASE("validate flags an injected fault") {
  GridDissection d = dissect(f1(), 3);
  d.lattice[1 * 4 + 1].u += 1e-3;  // interior vertex (1,1)
  CellReport rep = validate(d, 1e-8);
  CHECK(!rep.pass);
  int failing = 0;
  for (double r : rep.rel_defect)
    if (r > 1e-8) ++failing;
  CHECK(failing >= 1);
}

TEST_CASE("dissect rejects bad input") {
  CHECK_THROWS_AS((void)dissect(f1(), 0), Error);
  ConvexQuad rect = ConvexQuad::from_vertices({{{0, 0}, {2, 0}, {2, 1}, {0, 1}}});
  CHECK_THROWS_AS((void)dissect(rect, 2), Error);
}

TEST_CASE("dissect_square_tiling: trivial and uniform tilings") {
  ConvexQuad q = f1();
  auto trivial = dissect_square_tiling(q, {{{0, 0, 1}}});
  REQUIRE(trivial.size() == 1);
  for (int i = 0; i < 4; ++i)
    CHECK(close_pt(trivial[0].first[i], q[i], 1e-12));

  SquareTiling uni{{{0, 0, 0.5}, {0.5, 0, 0.5}, {0, 0.5, 0.5}, {0.5, 0.5, 0.5}}};
  auto cells = dissect_square_tiling(q, uni);
  GridDissection d = dissect(q, 2);
  std::array<std::pair<int, int>, 4> order{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (int c = 0; c < 4; ++c) {
    auto [k, j] = order[c];
    auto expect = d.cell(k, j);
    for (int i = 0; i < 4; ++i)
      CHECK(close_pt(cells[c].first[i], expect[i], 1e-12));
  }
}

TEST_CASE("dissect_square_tiling: the 6-square tiling with T-junctions") {
  const double th = 1.0 / 3.0;
  SquareTiling six{{{0, th, 2 * th},
                    {2 * th, 0, th},
                    {2 * th, th, th},
                    {2 * th, 2 * th, th},
                    {0, 0, th},
                    {th, 0, th}}};
  ConvexQuad q = f1();
  auto cells = dissect_square_tiling(q, six);
  REQUIRE(cells.size() == 6);
  for (const auto& [cell, inc] : cells) {
    CHECK(std::abs(pitot_defect(cell)) <= 1e-9 * perimeter(cell));
    CHECK(inc.radius > 0.0);
  }

  // T-junction collinearity: tile corners interior to another tile's edge
  // land on that cell's edge line.
  double diam = diameter(q);
  int junctions = 0;
  auto corners = [](const SquareTile& s) {
    return std::array<Point2, 4>{{{s.x0, s.y0},
                                  {s.x0 + s.side, s.y0},
                                  {s.x0 + s.side, s.y0 + s.side},
                                  {s.x0, s.y0 + s.side}}};
  };
  for (std::size_t a = 0; a < six.squares.size(); ++a)
    for (std::size_t b = 0; b < six.squares.size(); ++b) {
      if (a == b) continue;
      auto ca = corners(six.squares[a]);
      auto cb = corners(six.squares[b]);
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < 4; ++e) {
          Point2 p = ca[i], e0 = cb[e], e1 = cb[(e + 1) % 4];
          Point2 dseg = e1 - e0;
          double len2 = dot(dseg, dseg);
          double t = dot(p - e0, dseg) / len2;
          if (t <= 1e-12 || t >= 1 - 1e-12) continue;
          if (std::abs(cross(dseg, p - e0)) > 1e-12) continue;
          // unit-square T-junction found; check the mapped geometry
          ++junctions;
          Point2 img = cells[a].first[i];
          Point2 i0 = cells[b].first[e];
          Point2 i1 = cells[b].first[(e + 1) % 4];
          CHECK(dist_to_line(img, i0, i1) <= 1e-9 * diam);
        }
    }
  CHECK(junctions >= 2);
}

TEST_CASE("validate_tiling rejects bad tilings") {
  // overlapping tiles whose areas still sum to 1
  SquareTiling overlap{
      {{0, 0, 0.5}, {0.25, 0.25, 0.5}, {0.5, 0, 0.5}, {0, 0.5, 0.5}}};
  CHECK_THROWS_AS(validate_tiling(overlap), Error);
  try {
    validate_tiling(overlap);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidTiling);
  }
  CHECK_THROWS_AS(validate_tiling({{{0, 0, 0.5}}}), Error);      // gap
  CHECK_THROWS_AS(validate_tiling({{{0.8, 0.8, 0.5}}}), Error);  // outside
  CHECK_THROWS_AS(validate_tiling(SquareTiling{}), Error);       // empty
}

TEST_CASE("trapezoid and rhombus dissections validate too") {
  ConvexQuad f3 = canonical_quad(TrapezoidParams::make(1, 1, 1 + kSqrt2));
  CHECK(validate(dissect(f3, 7), 1e-10).pass);
  CHECK(validate(dissect(unit_square(), 5), 1e-12).pass);
  // rhombus with a non-right angle
  ConvexQuad rhomb = ConvexQuad::from_vertices(
      {{{0, 0}, {1, 0}, {1.5, std::sqrt(3) / 2}, {0.5, std::sqrt(3) / 2}}});
  CHECK(validate(dissect(rhomb, 4), 1e-12).pass);
}
