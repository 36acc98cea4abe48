#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tq/dissection.hpp"

namespace tq {

struct QuadDocument {
  std::array<Point2, 4> vertices;
  std::optional<std::string> label;

  ConvexQuad quad() const { return ConvexQuad::from_vertices(vertices); }
};

/// Lattice-based grid dissection file. Round-trips byte-identically.
struct DissectionDocument {
  int n = 0;
  std::vector<Point2> lattice;  // row-major, (n+1)^2 points
  QuadDocument source;
  double max_defect = 0.0;
};

/// Output of a square-tiling dissection (cells are not a lattice).
struct CellsDocument {
  QuadDocument source;
  std::vector<std::array<Point2, 4>> cells;
  std::vector<Incircle> incircles;
  double max_defect = 0.0;
};

/// Shortest round-trip decimal representation; -0 normalized to 0.
std::string fmt_double(double x);

std::string write_quad(const QuadDocument& d);
std::string write_dissection(const DissectionDocument& d);
std::string write_cells(const CellsDocument& d);
std::string write_quad_list(const std::vector<QuadDocument>& quads);
std::string write_tiling(const SquareTiling& t);

QuadDocument parse_quad(const std::string& text);
DissectionDocument parse_dissection(const std::string& text);
CellsDocument parse_cells(const std::string& text);
SquareTiling parse_tiling(const std::string& text);
/// True when the text looks like a lattice dissection document rather than
/// a cells document.
bool looks_like_lattice(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace tq
