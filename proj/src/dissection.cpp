#include "tq/dissection.hpp"

#include <algorithm>
#include <cmath>

#include "tq/kernels.hpp"

namespace tq {

namespace {

constexpr double kTilingEps = 1e-9;

void map_lattice(const NormalizedModel& model, const std::vector<double>& P,
                 const std::vector<double>& Q, std::vector<Point2>& out) {
  const std::size_t count = P.size();
  std::vector<double> u(count), w(count);
  const kernels::Backend& be = kernels::active_backend();
  auto mapfn = model.kind.tag == QuadClass::Tag::Trapezoid ? be.trapezoid_map
                                                           : be.general_map;
  mapfn(P.data(), Q.data(), u.data(), w.data(), count);
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = apply_similarity(model.placement, {u[i], w[i]});
}

}  // namespace

GridDissection dissect(const ConvexQuad& q, int n, double tol_rel) {
  if (n < 1) fail(Errc::InvalidParams, "grid order n must be >= 1");
  NormalizedModel model = normalize(q, tol_rel);
  const int w = n + 1;
  GridDissection d;
  d.n = n;

  if (model.kind.tag == QuadClass::Tag::Rhombus) {
    ConvexQuad r = ccw(q);
    Point2 eb = r[1] - r[0];
    Point2 ed = r[3] - r[0];
    d.lattice.resize(w * w);
    for (int j = 0; j < w; ++j)
      for (int k = 0; k < w; ++k)
        d.lattice[j * w + k] =
            r[0] + (double(k) / n) * eb + (double(j) / n) * ed;
  } else {
    double X, Y, L;
    if (model.kind.tag == QuadClass::Tag::Trapezoid) {
      X = model.trapezoid().X; Y = model.trapezoid().Y; L = model.trapezoid().L;
    } else {
      X = model.general().X; Y = model.general().Y; L = model.general().L;
    }
    std::vector<double> ladder(w);
    for (int i = 0; i < w; ++i) ladder[i] = fractional_power(L, i, n);
    std::vector<double> P(w * w), Q(w * w);
    for (int j = 0; j < w; ++j)
      for (int k = 0; k < w; ++k) {
        P[j * w + k] = X * ladder[k];
        Q[j * w + k] = Y * ladder[j];
      }
    map_lattice(model, P, Q, d.lattice);
  }
  d.source = std::move(model);
  return d;
}

void validate_tiling(const SquareTiling& t) {
  if (t.squares.empty()) fail(Errc::InvalidTiling, "tiling has no squares");
  double area = 0.0;
  for (const SquareTile& s : t.squares) {
    if (!(s.side > 0.0) || !std::isfinite(s.x0) || !std::isfinite(s.y0))
      fail(Errc::InvalidTiling, "tile with non-positive side or bad corner");
    if (s.x0 < -kTilingEps || s.y0 < -kTilingEps ||
        s.x0 + s.side > 1.0 + kTilingEps || s.y0 + s.side > 1.0 + kTilingEps)
      fail(Errc::InvalidTiling, "tile outside the unit square");
    area += s.side * s.side;
  }
  if (std::abs(area - 1.0) > 1e-9)
    fail(Errc::InvalidTiling, "tile areas do not sum to 1 (gap or overlap)");
  const auto& sq = t.squares;
  for (std::size_t i = 0; i < sq.size(); ++i)
    for (std::size_t j = i + 1; j < sq.size(); ++j) {
      double ox = std::min(sq[i].x0 + sq[i].side, sq[j].x0 + sq[j].side) -
                  std::max(sq[i].x0, sq[j].x0);
      double oy = std::min(sq[i].y0 + sq[i].side, sq[j].y0 + sq[j].side) -
                  std::max(sq[i].y0, sq[j].y0);
      if (ox > kTilingEps && oy > kTilingEps)
        fail(Errc::InvalidTiling, "tiles overlap");
    }
}

std::vector<std::pair<ConvexQuad, Incircle>> dissect_square_tiling(
    const ConvexQuad& q, const SquareTiling& t, double tol_rel) {
  validate_tiling(t);
  NormalizedModel model = normalize(q, tol_rel);
  std::vector<std::pair<ConvexQuad, Incircle>> out;
  out.reserve(t.squares.size());

  if (model.kind.tag == QuadClass::Tag::Rhombus) {
    ConvexQuad r = ccw(q);
    Point2 eb = r[1] - r[0];
    Point2 ed = r[3] - r[0];
    for (const SquareTile& s : t.squares) {
      auto corner = [&](double x, double y) { return r[0] + x * eb + y * ed; };
      ConvexQuad cell = ConvexQuad::from_vertices(
          {corner(s.x0, s.y0), corner(s.x0 + s.side, s.y0),
           corner(s.x0 + s.side, s.y0 + s.side), corner(s.x0, s.y0 + s.side)});
      out.emplace_back(cell, incircle(cell));
    }
    return out;
  }

  const bool trap = model.kind.tag == QuadClass::Tag::Trapezoid;
  double X = trap ? model.trapezoid().X : model.general().X;
  double Y = trap ? model.trapezoid().Y : model.general().Y;
  double L = trap ? model.trapezoid().L : model.general().L;
  for (const SquareTile& s : t.squares) {
    auto corner = [&](double x, double y) {
      MulPoint m{X * mul_power(L, x), Y * mul_power(L, y)};
      Point2 img = trap ? trapezoid_map(m) : general_map(m);
      return apply_similarity(model.placement, img);
    };
    ConvexQuad cell = ConvexQuad::from_vertices(
        {corner(s.x0, s.y0), corner(s.x0 + s.side, s.y0),
         corner(s.x0 + s.side, s.y0 + s.side), corner(s.x0, s.y0 + s.side)});
    out.emplace_back(cell, incircle(cell, 1e-8));
  }
  return out;
}

namespace {

CellReport report_from_defects(const std::vector<double>& defect,
                               const std::vector<double>& perim,
                               const std::vector<std::array<Point2, 4>>& cells,
                               double tol_rel) {
  CellReport rep;
  const std::size_t count = defect.size();
  rep.rel_defect.resize(count);
  rep.incircles.resize(count);
  rep.max_defect = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    rep.rel_defect[i] = std::abs(defect[i]) / perim[i];
    rep.max_defect = std::max(rep.max_defect, rep.rel_defect[i]);
    if (rep.rel_defect[i] <= tol_rel) {
      try {
        rep.incircles[i] =
            incircle(ConvexQuad::from_vertices(cells[i]), 1e-6);
      } catch (const Error&) {
        rep.incircles[i] = std::nullopt;
      }
    }
  }
  rep.pass = rep.max_defect <= tol_rel;
  return rep;
}

}  // namespace

CellReport validate(const GridDissection& d, double tol_rel) {
  const int n = d.n;
  const int w = n + 1;
  std::vector<double> u(w * w), v(w * w);
  for (int i = 0; i < w * w; ++i) {
    u[i] = d.lattice[i].u;
    v[i] = d.lattice[i].v;
  }
  std::vector<double> defect(n * n), perim(n * n);
  kernels::active_backend().cell_defects(u.data(), v.data(), n, defect.data(),
                                         perim.data());
  std::vector<std::array<Point2, 4>> cells(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) cells[j * n + k] = d.cell(k, j);
  return report_from_defects(defect, perim, cells, tol_rel);
}

CellReport validate_cells(std::span<const std::array<Point2, 4>> cells,
                          double tol_rel) {
  std::vector<double> defect(cells.size()), perim(cells.size());
  std::vector<std::array<Point2, 4>> copy(cells.begin(), cells.end());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    defect[i] = pitot_defect(cells[i]);
    perim[i] = perimeter(cells[i]);
  }
  return report_from_defects(defect, perim, copy, tol_rel);
}

}  // namespace tq
