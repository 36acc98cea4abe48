#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "tq/geometry.hpp"
#include "tq/transforms.hpp"

namespace tq {

struct SolverDiagnostics {
  double a_coef, b_coef, c_coef;
  std::array<double, 3> discriminants;  // a^2+4, b^2+4, c^2-4
  // 1 - t1 t2 > 0,  1 - t1 t4 > 0,  t1 t2 + t1 t4 + t2 t4 - 1 > 0
  std::array<bool, 3> feasibility;
};

/// Ties an input quad to its canonical form: vertex relabeling, solved
/// parameters, and the similarity placing the canonical frame into the
/// input frame. relabel_offset is relative to the CCW-oriented input
/// (clockwise input is reversed on ingestion, flagged in input_reversed).
struct NormalizedModel {
  QuadClass kind;
  std::variant<std::monostate, GeneralParams, TrapezoidParams> params;
  int relabel_offset = 0;
  bool input_reversed = false;
  Similarity placement;
  std::optional<Point2> anchor_o;  // image of O(0,0); legs apex for trapezoid
  std::optional<Point2> anchor_p;  // image of P(1,0); general case only

  const GeneralParams& general() const { return std::get<GeneralParams>(params); }
  const TrapezoidParams& trapezoid() const { return std::get<TrapezoidParams>(params); }
};

/// t3 = (t1+t2+t4 - t1 t2 t4) / (t1 t2 + t1 t4 + t2 t4 - 1).
double t3_from_identity(double t1, double t2, double t4);

/// Larger roots of the three quadratics in X, Y, L; guarantees XY > 1 and
/// L > 1 for feasible input. Throws InfeasibleAngles when any of the three
/// positivity conditions fails.
std::pair<GeneralParams, SolverDiagnostics> solve_general(
    const HalfAngleTangents& t);

/// Canonical-frame leg slopes m < p: X = 1, Y = m + sqrt(1+m^2),
/// L = (sqrt(1+p^2)+p)(sqrt(1+m^2)-m) > 1.
TrapezoidParams solve_trapezoid(double m, double p);

/// Full normalization: orientation, class routing, relabeling search,
/// parameter solve, placement. Reproduces the (relabeled) input vertices
/// within 1e-8 of the diameter.
NormalizedModel normalize(const ConvexQuad& q, double tol_rel = 1e-9);

}  // namespace tq
