#pragma once

#include <array>

#include "tq/geometry.hpp"

namespace tq {

// Multiplicative parameters of the canonical pre-image square: corner at
// (X, Y), side ratio L per edge. No base or exponents are ever stored; grid
// refinement uses fractional powers of L.
struct GeneralParams {
  double X, Y, L;
  static GeneralParams make(double X, double Y, double L);  // XY > 1, L > 1
};

struct TrapezoidParams {
  double X, Y, L;
  static TrapezoidParams make(double X, double Y, double L);  // L > 1
};

/// Point in multiplicative coordinates; the general map is singular on PQ=1.
struct MulPoint {
  double P, Q;
};

inline constexpr double kSingularEps = 1e-14;

/// u = P(Q^2-1)/((P+Q)(PQ-1)), v = 2PQ/((P+Q)(PQ-1)).
/// Throws SingularLocus when |PQ-1| < 1e-14.
Point2 general_map(MulPoint m);

/// u = P, v = P(Q - 1/Q)/2.
Point2 trapezoid_map(MulPoint m);

/// Image of the pre-image square's corners (X,Y), (XL,Y), (XL,YL), (X,YL);
/// convex, positively oriented, tangential.
ConvexQuad canonical_quad(const GeneralParams& p);
ConvexQuad canonical_quad(const TrapezoidParams& p);

/// Closed-form side lengths (A'B', B'C', C'D', D'A'); the two opposite-side
/// sums agree identically.
std::array<double, 4> side_length_oracle(const GeneralParams& p);
std::array<double, 4> side_length_oracle(const TrapezoidParams& p);

/// XY(L-1)/((X+Y)(XYL-1)); inradius of canonical_quad(p).
double inradius_oracle(const GeneralParams& p);

/// X(L^2 Y^2 - 1)/((X+Y)(XYL^2 - 1)); shared abscissa of the three centers
/// in the canonical frame.
double abscissa_oracle(const GeneralParams& p);

/// Closed-form half-angle tangents of canonical_quad(p).
HalfAngleTangents tangents_from_params(const GeneralParams& p);

enum class MapKind { General, Trapezoid };

/// Central-difference check of f_x^2+g_x^2 = f_y^2+g_y^2 at m, step h in the
/// additive (base-e) coordinates. Returns |lhs-rhs|/(lhs+rhs). For the
/// general map the stencil must stay 10h away from the singular line.
double local_condition_residual(MapKind kind, MulPoint m, double h);

/// L^(num/den) via exp((num/den)*log(L)); the one place fractional powers
/// are computed.
double fractional_power(double L, double num, double den);

/// L^e for e in [0,1] (square-tiling refinement).
double mul_power(double L, double e);

}  // namespace tq
