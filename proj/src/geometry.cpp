#include "tq/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace tq {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonConvex: return "NonConvex";
    case Errc::NotTangential: return "NotTangential";
    case Errc::DegenerateVertex: return "DegenerateVertex";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::ParallelLines: return "ParallelLines";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::SingularLocus: return "SingularLocus";
    case Errc::InfeasibleAngles: return "InfeasibleAngles";
    case Errc::SlopeOrder: return "SlopeOrder";
    case Errc::NoFeasibleLabeling: return "NoFeasibleLabeling";
    case Errc::InvalidTiling: return "InvalidTiling";
    case Errc::GapInfeasible: return "GapInfeasible";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

double dist_to_line(Point2 p, Point2 a, Point2 b) {
  Point2 d = b - a;
  return std::abs(cross(d, p - a)) / norm(d);
}

ConvexQuad ConvexQuad::from_vertices(const std::array<Point2, 4>& vs) {
  for (const Point2& p : vs) {
    if (!std::isfinite(p.u) || !std::isfinite(p.v))
      fail(Errc::NonConvex, "vertex coordinate is not finite");
  }
  double diam = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) diam = std::max(diam, dist(vs[i], vs[j]));
  if (!(diam > 0.0)) fail(Errc::NonConvex, "all vertices coincide");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (dist(vs[i], vs[j]) <= 1e-12 * diam)
        fail(Errc::NonConvex, "repeated vertex");

  int sign = 0;
  for (int i = 0; i < 4; ++i) {
    Point2 e0 = vs[(i + 1) % 4] - vs[i];
    Point2 e1 = vs[(i + 2) % 4] - vs[(i + 1) % 4];
    double c = cross(e0, e1);
    if (std::abs(c) <= 1e-14 * norm(e0) * norm(e1))
      fail(Errc::NonConvex, "three consecutive vertices are collinear");
    int s = c > 0.0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) fail(Errc::NonConvex, "vertices are not in convex position");
  }
  return ConvexQuad(vs);
}

double signed_area(const std::array<Point2, 4>& vs) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += cross(vs[i], vs[(i + 1) % 4]);
  return 0.5 * s;
}

double signed_area(const ConvexQuad& q) { return signed_area(q.vertices()); }

std::array<double, 4> side_lengths(const std::array<Point2, 4>& vs) {
  std::array<double, 4> s;
  for (int i = 0; i < 4; ++i) s[i] = dist(vs[i], vs[(i + 1) % 4]);
  return s;
}

double perimeter(const std::array<Point2, 4>& vs) {
  auto s = side_lengths(vs);
  return s[0] + s[1] + s[2] + s[3];
}

double perimeter(const ConvexQuad& q) { return perimeter(q.vertices()); }

double diameter(const ConvexQuad& q) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d = std::max(d, dist(q[i], q[j]));
  return d;
}

double pitot_defect(const std::array<Point2, 4>& vs) {
  auto s = side_lengths(vs);
  return (s[0] + s[2]) - (s[1] + s[3]);
}

double pitot_defect(const ConvexQuad& q) { return pitot_defect(q.vertices()); }

bool is_tangential(const ConvexQuad& q, double tol_rel) {
  return std::abs(pitot_defect(q)) <= tol_rel * perimeter(q);
}

QuadClass classify(const ConvexQuad& q, double tol_parallel) {
  bool par[2];
  for (int i = 0; i < 2; ++i) {
    Point2 d0 = q[i + 1] - q[i];
    Point2 d1 = q[i + 3] - q[i + 2];
    // |sin| of the angle between the two side directions
    par[i] = std::abs(cross(d0, d1)) <= tol_parallel * norm(d0) * norm(d1);
  }
  if (par[0] && par[1]) return {QuadClass::Tag::Rhombus, -1};
  if (par[0]) return {QuadClass::Tag::Trapezoid, 0};
  if (par[1]) return {QuadClass::Tag::Trapezoid, 1};
  return {QuadClass::Tag::General, -1};
}

HalfAngleTangents half_angle_tangents(const ConvexQuad& q0) {
  ConvexQuad q = ccw(q0);
  double t[4];
  for (int i = 0; i < 4; ++i) {
    Point2 d1 = q[i - 1] - q[i];
    Point2 d2 = q[i + 1] - q[i];
    double c = cross(d2, d1);  // positive for CCW convex input
    double d = dot(d1, d2);
    double nn = norm(d1) * norm(d2);
    if (c <= 1e-12 * nn)
      fail(Errc::DegenerateVertex, "interior angle too close to pi");
    // tan(theta/2) without arccos; pick the cancellation-free branch.
    t[i] = d > 0.0 ? c / (nn + d) : (nn - d) / c;
  }
  return {t[0], t[1], t[2], t[3]};
}

Incircle incircle(const ConvexQuad& q0, double tol_rel) {
  ConvexQuad q = ccw(q0);
  auto bisector = [&q](int i) {
    Point2 d1 = q[i - 1] - q[i];
    Point2 d2 = q[i + 1] - q[i];
    return (1.0 / norm(d1)) * d1 + (1.0 / norm(d2)) * d2;
  };
  Point2 c = line_intersection(q[0], q[0] + bisector(0), q[1], q[1] + bisector(1));
  double r = dist_to_line(c, q[0], q[1]);
  for (int i = 0; i < 4; ++i) {
    double di = dist_to_line(c, q[i], q[i + 1]);
    if (std::abs(di - r) > tol_rel * r)
      fail(Errc::NotTangential, "angle bisectors are not equidistant from all sides");
  }
  return {c, r};
}

double triangle_inradius(Point2 a, Point2 b, Point2 c) {
  double area2 = std::abs(cross(b - a, c - a));
  double s = 0.5 * (dist(b, c) + dist(c, a) + dist(a, b));
  if (area2 <= 1e-14 * s * s)
    fail(Errc::DegenerateTriangle, "triangle area below epsilon");
  return 0.5 * area2 / s;  // area / semiperimeter
}

Point2 line_intersection(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  Point2 r = p2 - p1;
  Point2 s = p4 - p3;
  double den = cross(r, s);
  if (std::abs(den) <= 1e-12 * norm(r) * norm(s))
    fail(Errc::ParallelLines, "lines are parallel within tolerance");
  double t = cross(p3 - p1, s) / den;
  return p1 + t * r;
}

Similarity similarity_from_pairs(Point2 src1, Point2 src2, Point2 dst1,
                                 Point2 dst2) {
  Point2 ds = src2 - src1;
  Point2 dd = dst2 - dst1;
  double n2 = ds.u * ds.u + ds.v * ds.v;
  if (!(n2 > 0.0)) fail(Errc::CoincidentPoints, "source points coincide");
  if (!(dd.u * dd.u + dd.v * dd.v > 0.0))
    fail(Errc::CoincidentPoints, "destination points coincide");
  // alpha = dd / ds in complex arithmetic
  double a = (dd.u * ds.u + dd.v * ds.v) / n2;
  double b = (dd.v * ds.u - dd.u * ds.v) / n2;
  Point2 t = dst1 - Point2{a * src1.u - b * src1.v, b * src1.u + a * src1.v};
  return {a, b, t};
}

Similarity inverse(const Similarity& s) {
  double n2 = s.a * s.a + s.b * s.b;
  if (!(n2 > 0.0)) fail(Errc::CoincidentPoints, "similarity is not invertible");
  double ia = s.a / n2;
  double ib = -s.b / n2;
  Point2 it{-(ia * s.t.u - ib * s.t.v), -(ib * s.t.u + ia * s.t.v)};
  return {ia, ib, it};
}

Point2 apply_similarity(const Similarity& s, Point2 p) {
  return {s.a * p.u - s.b * p.v + s.t.u, s.b * p.u + s.a * p.v + s.t.v};
}

ConvexQuad apply_similarity(const Similarity& s, const ConvexQuad& q) {
  std::array<Point2, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = apply_similarity(s, q[i]);
  return ConvexQuad::from_vertices(out);
}

ConvexQuad ccw(const ConvexQuad& q) {
  if (signed_area(q) > 0.0) return q;
  return ConvexQuad::from_vertices({q[0], q[3], q[2], q[1]});
}

}  // namespace tq
