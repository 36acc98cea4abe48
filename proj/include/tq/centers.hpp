#pragma once

#include <utility>

#include "tq/dissection.hpp"

namespace tq {

/// The three centers: incenter I, diagonal intersection S, and the interior
/// vertex W of the 2x2 grid dissection. collinearity_residual is the
/// normalized cross product of (S-I, W-I); perpendicularity_residual is the
/// normalized dot of the I-S-W line direction with the OP direction
/// (general case) or with the parallel-side direction (trapezoid case).
struct CentersReport {
  Point2 I, S, W;
  double collinearity_residual = 0.0;
  double perpendicularity_residual = 0.0;
};

/// Inradii of the four 2x2 cells, indexed by the normalized-frame corner
/// vertex each cell contains.
struct RadiiQuartet {
  double r_A, r_B, r_C, r_D;
};

struct TripleGridResiduals {
  double incenters = 0.0;
  double diagonal_points = 0.0;
  double centers_2x2 = 0.0;
};

/// Intersection of the two diagonals.
Point2 diagonal_point(const ConvexQuad& q);

/// Interior lattice vertex of dissect(q, 2): the placed image of the
/// multiplicative midpoint (X sqrt(L), Y sqrt(L)); vertex centroid for rhombi.
Point2 two_by_two_center(const ConvexQuad& q, double tol_rel = 1e-9);

CentersReport centers_report(const ConvexQuad& q, double tol_rel = 1e-9);

/// Bisector-incircle inradii of the 2x2 cells and the reciprocal-sum defect
/// |(1/r_A + 1/r_C) - (1/r_B + 1/r_D)| with opposite-cell pairing.
std::pair<RadiiQuartet, double> reciprocal_check(const ConvexQuad& q,
                                                 double tol_rel = 1e-9);

/// Normalized defect of the diagonal-triangle inradius relation
/// 1/r(A'SB') + 1/r(C'SD') = 1/r(B'SC') + 1/r(D'SA'); zero iff tangential.
double wu_check(const ConvexQuad& q);

/// Max row/column collinearity residual of the cell incenters, cell
/// diagonal points, and cell 2x2 centers of a dissection (n >= 2).
TripleGridResiduals triple_grid_report(const GridDissection& d,
                                       double tol_rel = 1e-9);

}  // namespace tq
