#include "tq/svg.hpp"

#include <algorithm>

#include "tq/io.hpp"

namespace tq {

namespace {

struct Frame {
  double x0, y0, w, h;   // viewBox
  double vmin, vmax;     // for the y flip
  double stroke;

  double fx(double u) const { return u; }
  // SVG y grows downward; reflect within the content band.
  double fy(double v) const { return (vmin + vmax) - v; }
};

std::string num(double x) { return fmt_double(x); }

}  // namespace

std::string render_svg(const GridDissection& d, const SvgOptions& opt) {
  const int n = d.n;
  const int w = n + 1;

  double umin = d.lattice[0].u, umax = umin;
  double vmin = d.lattice[0].v, vmax = vmin;
  for (const Point2& p : d.lattice) {
    umin = std::min(umin, p.u); umax = std::max(umax, p.u);
    vmin = std::min(vmin, p.v); vmax = std::max(vmax, p.v);
  }
  ConvexQuad outer = ConvexQuad::from_vertices(
      {d.at(0, 0), d.at(n, 0), d.at(n, n), d.at(0, n)});

  // Anchors can sit outside the quad's bounding box.
  std::vector<Point2> extra;
  if (opt.anchors) {
    if (d.source.anchor_o) extra.push_back(*d.source.anchor_o);
    if (d.source.anchor_p) extra.push_back(*d.source.anchor_p);
  }
  for (const Point2& p : extra) {
    umin = std::min(umin, p.u); umax = std::max(umax, p.u);
    vmin = std::min(vmin, p.v); vmax = std::max(vmax, p.v);
  }

  double margin = 0.05 * std::max(umax - umin, vmax - vmin);
  Frame f{umin - margin, 0.0, (umax - umin) + 2 * margin,
          (vmax - vmin) + 2 * margin, vmin, vmax, 0.0};
  f.y0 = vmin - margin;  // after the flip the band maps onto itself
  f.stroke = 0.003 * diameter(outer);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(f.x0) +
       " " + num(f.y0) + " " + num(f.w) + " " + num(f.h) + "\">\n";

  auto polygon = [&](const std::array<Point2, 4>& vs, const char* cls,
                     const char* stroke_color) {
    s += "<polygon class=\"" + std::string(cls) + "\" points=\"";
    for (int i = 0; i < 4; ++i) {
      if (i) s += ' ';
      s += num(f.fx(vs[i].u)) + "," + num(f.fy(vs[i].v));
    }
    s += "\" fill=\"none\" stroke=\"" + std::string(stroke_color) +
         "\" stroke-width=\"" + num(f.stroke) + "\"/>\n";
  };
  auto circle = [&](Point2 c, double r, const char* cls, const char* color,
                    bool filled) {
    s += "<circle class=\"" + std::string(cls) + "\" cx=\"" + num(f.fx(c.u)) +
         "\" cy=\"" + num(f.fy(c.v)) + "\" r=\"" + num(r) + "\"";
    if (filled)
      s += " fill=\"" + std::string(color) + "\"/>\n";
    else
      s += " fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"" + num(f.stroke) + "\"/>\n";
  };

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) polygon(d.cell(k, j), "cell", "#222222");

  if (opt.incircles) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Incircle c = incircle(ConvexQuad::from_vertices(d.cell(k, j)), 1e-6);
        circle(c.center, c.radius, "incircle", "#2a9d8f", false);
      }
  }

  double dot_r = 1.5 * f.stroke;
  if (opt.triple_grid) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ConvexQuad cell = ConvexQuad::from_vertices(d.cell(k, j));
        circle(incircle(cell, 1e-6).center, dot_r, "tg-incenter", "#2a9d8f", true);
        circle(diagonal_point(cell), dot_r, "tg-diagonal", "#e63946", true);
        circle(two_by_two_center(cell), dot_r, "tg-center2", "#457b9d", true);
      }
  }

  if (opt.centers) {
    CentersReport rep = centers_report(outer);
    // chord through the extreme pair of {I,S,W}
    std::array<Point2, 3> pts{rep.I, rep.S, rep.W};
    int a = 0, b = 1;
    double best = -1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (dist(pts[i], pts[j]) > best) { best = dist(pts[i], pts[j]); a = i; b = j; }
    if (best > 0.0)
      s += "<line class=\"centers-line\" x1=\"" + num(f.fx(pts[a].u)) +
           "\" y1=\"" + num(f.fy(pts[a].v)) + "\" x2=\"" + num(f.fx(pts[b].u)) +
           "\" y2=\"" + num(f.fy(pts[b].v)) + "\" stroke=\"#888888\" stroke-width=\"" +
           num(f.stroke) + "\"/>\n";
    circle(rep.I, 2.0 * f.stroke, "center-I", "#2a9d8f", true);
    circle(rep.S, 2.0 * f.stroke, "center-S", "#e63946", true);
    circle(rep.W, 2.0 * f.stroke, "center-W", "#457b9d", true);
  }

  if (opt.anchors) {
    if (d.source.anchor_o)
      circle(*d.source.anchor_o, 2.0 * f.stroke, "anchor-O", "#f4a261", true);
    if (d.source.anchor_p)
      circle(*d.source.anchor_p, 2.0 * f.stroke, "anchor-P", "#f4a261", true);
  }

  s += "</svg>\n";
  return s;
}

}  // namespace tq
