#pragma once

#include <string>

#include "tq/centers.hpp"

namespace tq {

struct SvgOptions {
  bool incircles = false;
  bool centers = false;
  bool triple_grid = false;
  bool anchors = false;  // mark the O/P grid-line anchors when they exist
};

/// Static SVG 1.1 figure: exactly n^2 cell polygons plus the requested
/// overlays, viewBox fitted to the quad with a 5% margin, stroke width
/// 0.3% of the diagram diameter. Byte-deterministic for fixed input.
std::string render_svg(const GridDissection& d, const SvgOptions& opt = {});

}  // namespace tq
