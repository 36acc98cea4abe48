#include "tq/centers.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tq {

namespace {

Point2 two_by_two_center_of(const NormalizedModel& model, const ConvexQuad& q) {
  switch (model.kind.tag) {
    case QuadClass::Tag::Rhombus: {
      ConvexQuad r = ccw(q);
      return 0.25 * (r[0] + r[1] + r[2] + r[3]);
    }
    case QuadClass::Tag::Trapezoid: {
      const TrapezoidParams& p = model.trapezoid();
      double s = fractional_power(p.L, 1, 2);
      return apply_similarity(model.placement,
                              trapezoid_map({p.X * s, p.Y * s}));
    }
    case QuadClass::Tag::General: {
      const GeneralParams& p = model.general();
      double s = fractional_power(p.L, 1, 2);
      return apply_similarity(model.placement, general_map({p.X * s, p.Y * s}));
    }
  }
  fail(Errc::InvalidParams, "unreachable");
}

// Max normalized distance of the points from the chord through the first
// and last point; 0 for fewer than three points.
double collinearity_residual(const std::vector<Point2>& pts) {
  if (pts.size() < 3) return 0.0;
  Point2 d = pts.back() - pts.front();
  double len = norm(d);
  if (!(len > 0.0)) return 0.0;
  double worst = 0.0;
  for (const Point2& p : pts)
    worst = std::max(worst, std::abs(cross(d, p - pts.front())) / (len * len));
  return worst;
}

}  // namespace

Point2 diagonal_point(const ConvexQuad& q) {
  return line_intersection(q[0], q[2], q[1], q[3]);
}

Point2 two_by_two_center(const ConvexQuad& q, double tol_rel) {
  return two_by_two_center_of(normalize(q, tol_rel), q);
}

CentersReport centers_report(const ConvexQuad& q0, double tol_rel) {
  ConvexQuad q = ccw(q0);
  NormalizedModel model = normalize(q, tol_rel);
  CentersReport rep;
  rep.I = incircle(q, tol_rel).center;
  rep.S = diagonal_point(q);
  rep.W = two_by_two_center_of(model, q);

  double diam = diameter(q);
  Point2 dis = rep.S - rep.I;
  Point2 diw = rep.W - rep.I;
  double nis = norm(dis), niw = norm(diw);
  if (nis > 1e-12 * diam && niw > 1e-12 * diam)
    rep.collinearity_residual = std::abs(cross(dis, diw)) / (nis * niw);

  Point2 axis{0, 0};
  if (model.kind.tag == QuadClass::Tag::General)
    axis = *model.anchor_p - *model.anchor_o;
  else if (model.kind.tag == QuadClass::Tag::Trapezoid) {
    int i = model.kind.parallel_pair;  // a parallel side's direction
    axis = q[i + 1] - q[i];
  }
  Point2 line_dir = nis >= niw ? dis : diw;
  if (norm(axis) > 0.0 && norm(line_dir) > 1e-12 * diam)
    rep.perpendicularity_residual =
        std::abs(dot(line_dir, axis)) / (norm(line_dir) * norm(axis));
  return rep;
}

std::pair<RadiiQuartet, double> reciprocal_check(const ConvexQuad& q,
                                                 double tol_rel) {
  GridDissection d = dissect(q, 2, tol_rel);
  auto cell_radius = [&](int k, int j) {
    return incircle(ConvexQuad::from_vertices(d.cell(k, j)), 1e-6).radius;
  };
  RadiiQuartet r{cell_radius(0, 0), cell_radius(1, 0), cell_radius(1, 1),
                 cell_radius(0, 1)};
  double defect =
      std::abs((1.0 / r.r_A + 1.0 / r.r_C) - (1.0 / r.r_B + 1.0 / r.r_D));
  return {r, defect};
}

double wu_check(const ConvexQuad& q0) {
  ConvexQuad q = ccw(q0);
  Point2 s = diagonal_point(q);
  double i1 = 1.0 / triangle_inradius(q[0], s, q[1]);
  double i2 = 1.0 / triangle_inradius(q[1], s, q[2]);
  double i3 = 1.0 / triangle_inradius(q[2], s, q[3]);
  double i4 = 1.0 / triangle_inradius(q[3], s, q[0]);
  return std::abs((i1 + i3) - (i2 + i4)) / (i1 + i2 + i3 + i4);
}

TripleGridResiduals triple_grid_report(const GridDissection& d,
                                       double tol_rel) {
  const int n = d.n;
  if (n < 2) fail(Errc::InvalidParams, "triple-grid report requires n >= 2");
  std::vector<Point2> inc(n * n), dia(n * n), two(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      ConvexQuad cell = ConvexQuad::from_vertices(d.cell(k, j));
      inc[j * n + k] = incircle(cell, 1e-6).center;
      dia[j * n + k] = diagonal_point(cell);
      two[j * n + k] = two_by_two_center(cell, std::max(tol_rel, 1e-9));
    }

  auto family_residual = [n](const std::vector<Point2>& pts) {
    double worst = 0.0;
    std::vector<Point2> line(n);
    for (int j = 0; j < n; ++j) {  // rows: k varies
      for (int k = 0; k < n; ++k) line[k] = pts[j * n + k];
      worst = std::max(worst, collinearity_residual(line));
    }
    for (int k = 0; k < n; ++k) {  // columns: j varies
      for (int j = 0; j < n; ++j) line[j] = pts[j * n + k];
      worst = std::max(worst, collinearity_residual(line));
    }
    return worst;
  };
  return {family_residual(inc), family_residual(dia), family_residual(two)};
}

}  // namespace tq
