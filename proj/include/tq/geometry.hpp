#pragma once

#include <array>
#include <cmath>

#include "tq/error.hpp"

namespace tq {

struct Point2 {
  double u = 0.0;
  double v = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.u + b.u, a.v + b.v}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.u - b.u, a.v - b.v}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.u, s * a.v}; }
inline double dot(Point2 a, Point2 b) { return a.u * b.u + a.v * b.v; }
inline double cross(Point2 a, Point2 b) { return a.u * b.v - a.v * b.u; }
inline double norm(Point2 a) { return std::sqrt(a.u * a.u + a.v * a.v); }
inline double dist(Point2 a, Point2 b) { return norm(b - a); }
inline Point2 perp(Point2 a) { return {-a.v, a.u}; }  // 90 degrees CCW

/// Distance from p to the infinite line through a and b.
double dist_to_line(Point2 p, Point2 a, Point2 b);

/// Strictly convex quadrilateral, vertices in cyclic order (either
/// orientation). Construction validates convexity and rejects repeated or
/// non-finite vertices.
class ConvexQuad {
 public:
  static ConvexQuad from_vertices(const std::array<Point2, 4>& vs);

  const std::array<Point2, 4>& vertices() const { return v_; }
  /// Cyclic access: any integer index is reduced mod 4.
  const Point2& operator[](int i) const { return v_[((i % 4) + 4) % 4]; }

 private:
  explicit ConvexQuad(const std::array<Point2, 4>& vs) : v_(vs) {}
  std::array<Point2, 4> v_;
};

struct QuadClass {
  enum class Tag { General, Trapezoid, Rhombus };
  Tag tag = Tag::General;
  // For Trapezoid: 0 = sides {0,2} parallel, 1 = sides {1,3} parallel.
  int parallel_pair = -1;
};

/// Tangents of the four vertex half-angles; all positive for convex input.
struct HalfAngleTangents {
  double t1, t2, t3, t4;
  double operator[](int i) const {
    const double* t = &t1;
    return t[((i % 4) + 4) % 4];
  }
};

struct Incircle {
  Point2 center;
  double radius = 0.0;
};

/// Orientation-preserving conformal map p -> R*p + t where R encodes
/// rotation+scale as the complex number a + i b.
struct Similarity {
  double a = 1.0;
  double b = 0.0;
  Point2 t;

  double scale() const { return std::sqrt(a * a + b * b); }
  double rotation() const { return std::atan2(b, a); }
};

double signed_area(const std::array<Point2, 4>& vs);
double signed_area(const ConvexQuad& q);

std::array<double, 4> side_lengths(const std::array<Point2, 4>& vs);
double perimeter(const std::array<Point2, 4>& vs);
double perimeter(const ConvexQuad& q);
/// Max pairwise vertex distance.
double diameter(const ConvexQuad& q);

/// (s0 + s2) - (s1 + s3); zero exactly iff the quad is tangential.
double pitot_defect(const std::array<Point2, 4>& vs);
double pitot_defect(const ConvexQuad& q);

bool is_tangential(const ConvexQuad& q, double tol_rel = 1e-9);

QuadClass classify(const ConvexQuad& q, double tol_parallel = 1e-9);

HalfAngleTangents half_angle_tangents(const ConvexQuad& q);

/// Incircle from two adjacent interior-angle bisectors, validated
/// equidistant from all four side lines. Throws NotTangential otherwise.
Incircle incircle(const ConvexQuad& q, double tol_rel = 1e-9);

double triangle_inradius(Point2 a, Point2 b, Point2 c);

/// Intersection of the infinite lines (p1,p2) and (p3,p4).
Point2 line_intersection(Point2 p1, Point2 p2, Point2 p3, Point2 p4);

Similarity similarity_from_pairs(Point2 src1, Point2 src2, Point2 dst1,
                                 Point2 dst2);
Similarity inverse(const Similarity& s);
Point2 apply_similarity(const Similarity& s, Point2 p);
ConvexQuad apply_similarity(const Similarity& s, const ConvexQuad& q);

/// Counterclockwise copy (reverses clockwise input, keeping vertex 0 first).
ConvexQuad ccw(const ConvexQuad& q);

}  // namespace tq
