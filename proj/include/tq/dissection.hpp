#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tq/solver.hpp"

namespace tq {

/// (n+1)x(n+1) vertex lattice of an n x n grid dissection, row-major with
/// k (the X direction) fastest: vertex (k,j) at index j*(n+1)+k.
struct GridDissection {
  int n = 0;
  std::vector<Point2> lattice;
  NormalizedModel source;

  const Point2& at(int k, int j) const { return lattice[j * (n + 1) + k]; }
  /// Cell (k,j) as its four lattice corners in CCW order.
  std::array<Point2, 4> cell(int k, int j) const {
    return {at(k, j), at(k + 1, j), at(k + 1, j + 1), at(k, j + 1)};
  }
};

struct SquareTile {
  double x0, y0, side;
};

/// Dissection of the unit square into axis-aligned sub-squares.
struct SquareTiling {
  std::vector<SquareTile> squares;
};

/// Per-cell Pitot report; never throws, failing cells carry no incircle.
struct CellReport {
  std::vector<double> rel_defect;
  std::vector<std::optional<Incircle>> incircles;
  double max_defect = 0.0;
  bool pass = false;
};

/// n x n class-preserving grid dissection. Lattice vertex (k,j) is the
/// placed image of (X L^(k/n), Y L^(j/n)); rhombi use the affine lattice.
GridDissection dissect(const ConvexQuad& q, int n, double tol_rel = 1e-9);

/// Throws InvalidTiling on overlap, gap, or out-of-range tiles.
void validate_tiling(const SquareTiling& t);

/// Image of an arbitrary square tiling: tile (x0,y0,s) becomes the cell
/// with parameters (X L^x0, Y L^y0, L^s). Cells share edge lines where
/// tiles abut, including across T-junctions.
std::vector<std::pair<ConvexQuad, Incircle>> dissect_square_tiling(
    const ConvexQuad& q, const SquareTiling& t, double tol_rel = 1e-9);

CellReport validate(const GridDissection& d, double tol_rel = 1e-9);
CellReport validate_cells(std::span<const std::array<Point2, 4>> cells,
                          double tol_rel = 1e-9);

}  // namespace tq
