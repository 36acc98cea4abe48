#include "tq/solver.hpp"

#include <algorithm>
#include <cmath>

namespace tq {

namespace {

// x + sqrt(1 + x^2) without cancellation for x < 0.
double stable_asinh_exp(double x) {
  double r = std::sqrt(1.0 + x * x);
  return x >= 0.0 ? x + r : 1.0 / (r - x);
}

// Larger root of z^2 - a z - 1 = 0 (roots have product -1).
double larger_root_minus_one(double a) {
  double r = std::sqrt(a * a + 4.0);
  return a >= 0.0 ? 0.5 * (a + r) : 2.0 / (r - a);
}

constexpr double kVertexMatchTol = 1e-8;

}  // namespace

double t3_from_identity(double t1, double t2, double t4) {
  double den = t1 * t2 + t1 * t4 + t2 * t4 - 1.0;
  if (!(den > 0.0))
    fail(Errc::InfeasibleAngles, "t1 t2 + t1 t4 + t2 t4 - 1 must be positive");
  return (t1 + t2 + t4 - t1 * t2 * t4) / den;
}

std::pair<GeneralParams, SolverDiagnostics> solve_general(
    const HalfAngleTangents& t) {
  double t1 = t.t1, t2 = t.t2, t4 = t.t4;
  double f1 = 1.0 - t1 * t2;
  double f2 = 1.0 - t1 * t4;
  double f3 = t1 * t2 + t1 * t4 + t2 * t4 - 1.0;
  SolverDiagnostics diag;
  diag.feasibility = {f1 > 0.0, f2 > 0.0, f3 > 0.0};
  if (!(f1 > 0.0 && f2 > 0.0 && f3 > 0.0))
    fail(Errc::InfeasibleAngles,
         "half-angle tangents violate a positivity condition");

  double s24 = t2 + t4;
  double a = (2.0 * t1 + t2 - t4 - t1 * t1 * s24) / f1;
  double b = (2.0 * t1 - t2 + t4 - t1 * t1 * s24) / f2;
  double q12 = t1 * t2 + t1 * t4 - 1.0;
  double c = (q12 * q12 + t2 * t2 + t4 * t4 + 1.0) / f3;
  diag.a_coef = a;
  diag.b_coef = b;
  diag.c_coef = c;
  diag.discriminants = {a * a + 4.0, b * b + 4.0, c * c - 4.0};

  double X = larger_root_minus_one(a);
  double Y = larger_root_minus_one(b);
  double cd = c * c - 4.0;  // c > 2 under feasibility; clamp rounding dust
  double L = 0.5 * (c + std::sqrt(std::max(cd, 0.0)));
  if (!(X * Y > 1.0) || !(L > 1.0))
    fail(Errc::InfeasibleAngles, "solved parameters sit on the XY=1 or L=1 boundary");
  return {GeneralParams::make(X, Y, L), diag};
}

TrapezoidParams solve_trapezoid(double m, double p) {
  if (!(p > m)) fail(Errc::SlopeOrder, "leg slopes require p > m");
  double Y = stable_asinh_exp(m);
  double L = stable_asinh_exp(p) / stable_asinh_exp(m);
  return TrapezoidParams::make(1.0, Y, L);
}

namespace {

NormalizedModel normalize_general(const ConvexQuad& q, bool reversed,
                                  const QuadClass& cls) {
  HalfAngleTangents tg = half_angle_tangents(q);
  double t[4] = {tg.t1, tg.t2, tg.t3, tg.t4};

  // Exactly one cyclic relabeling is expected to satisfy all three
  // positivity conditions; near-degenerate ties resolve to the largest
  // minimum margin, then to the smallest offset.
  int best = -1;
  double best_margin = 0.0;
  for (int o = 0; o < 4; ++o) {
    double t1 = t[o], t2 = t[(o + 1) & 3], t4 = t[(o + 3) & 3];
    double margin = std::min({1.0 - t1 * t2, 1.0 - t1 * t4,
                              t1 * t2 + t1 * t4 + t2 * t4 - 1.0});
    if (margin > best_margin) {
      best_margin = margin;
      best = o;
    }
  }
  if (best < 0)
    fail(Errc::NoFeasibleLabeling,
         "no cyclic relabeling satisfies the feasibility conditions");

  std::array<Point2, 4> w = {q[best], q[best + 1], q[best + 2], q[best + 3]};
  auto [params, diag] = solve_general(
      {t[best], t[(best + 1) & 3], t[(best + 2) & 3], t[(best + 3) & 3]});
  (void)diag;

  Point2 o_in = line_intersection(w[0], w[1], w[2], w[3]);
  Point2 p_in = line_intersection(w[1], w[2], w[3], w[0]);
  Similarity place = similarity_from_pairs({0, 0}, {1, 0}, o_in, p_in);

  ConvexQuad canon = canonical_quad(params);
  double diam = diameter(q);
  for (int i = 0; i < 4; ++i)
    if (dist(apply_similarity(place, canon[i]), w[i]) > kVertexMatchTol * diam)
      fail(Errc::NoFeasibleLabeling, "canonical reconstruction mismatch");

  NormalizedModel model;
  model.kind = cls;
  model.params = params;
  model.relabel_offset = best;
  model.input_reversed = reversed;
  model.placement = place;
  model.anchor_o = o_in;
  model.anchor_p = p_in;
  return model;
}

NormalizedModel normalize_trapezoid(const ConvexQuad& q, bool reversed,
                                    const QuadClass& cls) {
  // Relabel so the parallel pair is {D'A', B'C'} and D'A' is the side
  // nearer the legs' apex; of the two candidate offsets exactly one works.
  int o0 = cls.parallel_pair == 0 ? 1 : 0;
  int offset = -1;
  Point2 apex;
  std::array<Point2, 4> w;
  for (int o : {o0, o0 + 2}) {
    std::array<Point2, 4> cand = {q[o], q[o + 1], q[o + 2], q[o + 3]};
    Point2 vtx = line_intersection(cand[0], cand[1], cand[2], cand[3]);
    double d_near = dist_to_line(vtx, cand[3], cand[0]);
    double d_far = dist_to_line(vtx, cand[1], cand[2]);
    if (d_near < d_far) {
      offset = o;
      apex = vtx;
      w = cand;
      break;
    }
  }
  if (offset < 0)
    fail(Errc::NoFeasibleLabeling, "trapezoid apex ordering is ambiguous");

  // Canonical frame: u-axis from the apex toward the quad, parallel sides
  // vertical; leg slopes in that frame drive the closed-form solve.
  Point2 tau = w[0] - w[3];
  Point2 n = (1.0 / norm(tau)) * perp(tau);
  Point2 centroid = 0.25 * (w[0] + w[1] + w[2] + w[3]);
  if (dot(n, centroid - apex) < 0.0) n = -1.0 * n;
  Point2 vdir = perp(n);
  auto frame_slope = [&](Point2 a, Point2 b) {
    Point2 d = b - a;
    double du = dot(d, n);
    if (std::abs(du) <= 1e-15 * norm(d))
      fail(Errc::DegenerateVertex, "trapezoid leg parallel to its bases");
    return dot(d, vdir) / du;
  };
  double m = frame_slope(w[0], w[1]);
  double p = frame_slope(w[2], w[3]);
  TrapezoidParams params = solve_trapezoid(m, p);

  ConvexQuad canon = canonical_quad(params);
  Similarity place = similarity_from_pairs(canon[0], canon[1], w[0], w[1]);
  double diam = diameter(q);
  for (int i = 0; i < 4; ++i)
    if (dist(apply_similarity(place, canon[i]), w[i]) > kVertexMatchTol * diam)
      fail(Errc::NoFeasibleLabeling, "canonical reconstruction mismatch");

  NormalizedModel model;
  model.kind = cls;
  model.params = params;
  model.relabel_offset = offset & 3;
  model.input_reversed = reversed;
  model.placement = place;
  model.anchor_o = apex;
  return model;
}

}  // namespace

NormalizedModel normalize(const ConvexQuad& q_in, double tol_rel) {
  bool reversed = signed_area(q_in) < 0.0;
  ConvexQuad q = ccw(q_in);
  if (!is_tangential(q, tol_rel))
    fail(Errc::NotTangential, "Pitot defect exceeds tolerance");
  QuadClass cls = classify(q, tol_rel);
  switch (cls.tag) {
    case QuadClass::Tag::Rhombus: {
      NormalizedModel model;
      model.kind = cls;
      model.input_reversed = reversed;
      return model;  // affine path; identity placement, no params
    }
    case QuadClass::Tag::Trapezoid:
      return normalize_trapezoid(q, reversed, cls);
    case QuadClass::Tag::General:
      return normalize_general(q, reversed, cls);
  }
  fail(Errc::NoFeasibleLabeling, "unreachable");
}

}  // namespace tq
