#include "tq/transforms.hpp"

#include <cmath>

#include "kernels/kernels_common.hpp"

namespace tq {

GeneralParams GeneralParams::make(double X, double Y, double L) {
  if (!(X > 0.0) || !(Y > 0.0) || !std::isfinite(X) || !std::isfinite(Y))
    fail(Errc::InvalidParams, "X and Y must be positive finite");
  if (!(X * Y > 1.0)) fail(Errc::InvalidParams, "general params require XY > 1");
  if (!(L > 1.0) || !std::isfinite(L))
    fail(Errc::InvalidParams, "params require L > 1");
  return {X, Y, L};
}

TrapezoidParams TrapezoidParams::make(double X, double Y, double L) {
  if (!(X > 0.0) || !(Y > 0.0) || !std::isfinite(X) || !std::isfinite(Y))
    fail(Errc::InvalidParams, "X and Y must be positive finite");
  if (!(L > 1.0) || !std::isfinite(L))
    fail(Errc::InvalidParams, "params require L > 1");
  return {X, Y, L};
}

Point2 general_map(MulPoint m) {
  if (!(m.P > 0.0) || !(m.Q > 0.0))
    fail(Errc::InvalidParams, "multiplicative coordinates must be positive");
  if (std::abs(m.P * m.Q - 1.0) < kSingularEps)
    fail(Errc::SingularLocus, "PQ too close to 1");
  Point2 out;
  kernels::detail::general_map_one(m.P, m.Q, out.u, out.v);
  return out;
}

Point2 trapezoid_map(MulPoint m) {
  if (!(m.P > 0.0) || !(m.Q > 0.0))
    fail(Errc::InvalidParams, "multiplicative coordinates must be positive");
  Point2 out;
  kernels::detail::trapezoid_map_one(m.P, m.Q, out.u, out.v);
  return out;
}

namespace {

template <typename Params, Point2 (*Map)(MulPoint)>
ConvexQuad corners(const Params& p) {
  double XL = p.X * p.L;
  double YL = p.Y * p.L;
  return ConvexQuad::from_vertices({Map({p.X, p.Y}), Map({XL, p.Y}),
                                    Map({XL, YL}), Map({p.X, YL})});
}

}  // namespace

ConvexQuad canonical_quad(const GeneralParams& p) {
  return corners<GeneralParams, &general_map>(p);
}

ConvexQuad canonical_quad(const TrapezoidParams& p) {
  return corners<TrapezoidParams, &trapezoid_map>(p);
}

std::array<double, 4> side_length_oracle(const GeneralParams& p) {
  double X = p.X, Y = p.Y, L = p.L;
  double ab = X * Y * (L - 1) * (Y * Y + 1) * (X * X * L + 1) /
              ((X + Y) * (X * Y - 1) * (X * L + Y) * (X * Y * L - 1));
  double bc = X * Y * (L - 1) * (Y * Y * L + 1) * (X * X * L * L + 1) /
              ((X + Y) * (X * L + Y) * (X * Y * L - 1) * (X * Y * L * L - 1));
  double cd = X * Y * (L - 1) * (Y * Y * L * L + 1) * (X * X * L + 1) /
              ((X + Y) * (X + Y * L) * (X * Y * L - 1) * (X * Y * L * L - 1));
  double da = X * Y * (1 + X * X) * (L - 1) * (Y * Y * L + 1) /
              ((X + Y) * (X * Y - 1) * (X + Y * L) * (X * Y * L - 1));
  return {ab, bc, cd, da};
}

std::array<double, 4> side_length_oracle(const TrapezoidParams& p) {
  double X = p.X, Y = p.Y, L = p.L;
  double ab = X * (1 + Y * Y) * (L - 1) / (2 * Y);
  double bc = X * (1 + Y * Y * L) * (L - 1) / (2 * Y);
  double cd = X * (1 + Y * Y * L * L) * (L - 1) / (2 * Y * L);
  double da = X * (1 + Y * Y * L) * (L - 1) / (2 * Y * L);
  return {ab, bc, cd, da};
}

double inradius_oracle(const GeneralParams& p) {
  double X = p.X, Y = p.Y, L = p.L;
  return X * Y * (L - 1) / ((X + Y) * (X * Y * L - 1));
}

double abscissa_oracle(const GeneralParams& p) {
  double X = p.X, Y = p.Y, L = p.L;
  return X * (L * L * Y * Y - 1) / ((X + Y) * (X * Y * L * L - 1));
}

HalfAngleTangents tangents_from_params(const GeneralParams& p) {
  double X = p.X, Y = p.Y, L = p.L;
  double t1 = (X * Y - 1) / (X + Y);
  double t2 = (X * L + Y) / (X * Y * L - 1);
  double t3 = (X * Y * L * L - 1) / (L * (X + Y));
  double t4 = (X + Y * L) / (X * Y * L - 1);
  return {t1, t2, t3, t4};
}

double local_condition_residual(MapKind kind, MulPoint m, double h) {
  if (!(h > 0.0)) fail(Errc::InvalidParams, "step h must be positive");
  if (!(m.P > 0.0) || !(m.Q > 0.0))
    fail(Errc::InvalidParams, "multiplicative coordinates must be positive");
  if (kind == MapKind::General) {
    // additive distance to the singular line x + y = 0
    if (std::abs(std::log(m.P * m.Q)) < 10.0 * h)
      fail(Errc::SingularLocus, "stencil too close to the PQ=1 locus");
  }
  auto eval = [kind](double P, double Q) {
    return kind == MapKind::General ? general_map({P, Q})
                                    : trapezoid_map({P, Q});
  };
  double eh = std::exp(h);
  double emh = std::exp(-h);
  Point2 xp = eval(m.P * eh, m.Q);
  Point2 xm = eval(m.P * emh, m.Q);
  Point2 yp = eval(m.P, m.Q * eh);
  Point2 ym = eval(m.P, m.Q * emh);
  double fx = (xp.u - xm.u) / (2 * h);
  double gx = (xp.v - xm.v) / (2 * h);
  double fy = (yp.u - ym.u) / (2 * h);
  double gy = (yp.v - ym.v) / (2 * h);
  double lhs = fx * fx + gx * gx;
  double rhs = fy * fy + gy * gy;
  return std::abs(lhs - rhs) / (lhs + rhs);
}

double fractional_power(double L, double num, double den) {
  return mul_power(L, num / den);
}

double mul_power(double L, double e) { return std::exp(e * std::log(L)); }

}  // namespace tq
