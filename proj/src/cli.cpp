#include "tq/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tq/centers.hpp"
#include "tq/io.hpp"
#include "tq/random_quads.hpp"
#include "tq/svg.hpp"

namespace tq {

namespace {

const char* class_name(const QuadClass& c) {
  switch (c.tag) {
    case QuadClass::Tag::General: return "general";
    case QuadClass::Tag::Trapezoid: return "trapezoid";
    case QuadClass::Tag::Rhombus: return "rhombus";
  }
  return "?";
}

QuadDocument load_quad(const std::string& path) {
  return parse_quad(read_file(path));
}

QuadDocument doc_from_quad(const ConvexQuad& q,
                           std::optional<std::string> label = {}) {
  QuadDocument d;
  d.vertices = q.vertices();
  d.label = std::move(label);
  return d;
}

int run_check(const std::string& input, double tol) {
  QuadDocument doc = load_quad(input);
  ConvexQuad q = doc.quad();
  if (doc.label) std::cout << "label: " << *doc.label << "\n";
  std::cout << "orientation: " << (signed_area(q) > 0 ? "ccw" : "cw") << "\n";
  double rel = std::abs(pitot_defect(q)) / perimeter(q);
  bool tang = is_tangential(q, tol);
  std::cout << "pitot defect (relative): " << fmt_double(rel) << "\n";
  if (tang) {
    QuadClass cls = classify(q, tol);
    std::cout << "class: " << class_name(cls);
    if (cls.tag == QuadClass::Tag::Trapezoid)
      std::cout << " (parallel sides " << (cls.parallel_pair == 0 ? "{A'B',C'D'}" : "{B'C',D'A'}") << ")";
    std::cout << "\n";
  }
  std::cout << "tangential at tol " << fmt_double(tol) << ": "
            << (tang ? "yes" : "no") << "\n";
  return tang ? 0 : 1;
}

int run_dissect(const std::string& input, int n, const std::string& tiling_path,
                const std::string& out, double tol) {
  QuadDocument doc = load_quad(input);
  ConvexQuad q = doc.quad();

  if (!tiling_path.empty()) {
    SquareTiling t = parse_tiling(read_file(tiling_path));
    auto cells = dissect_square_tiling(q, t, tol);
    std::vector<std::array<Point2, 4>> raw;
    CellsDocument cd;
    cd.source = doc;
    for (auto& [cell, inc] : cells) {
      cd.cells.push_back(cell.vertices());
      cd.incircles.push_back(inc);
      raw.push_back(cell.vertices());
    }
    CellReport rep = validate_cells(raw, tol);
    cd.max_defect = rep.max_defect;
    if (!out.empty()) write_file(out, write_cells(cd));
    std::cout << "cells: " << cd.cells.size()
              << "\nmax relative defect: " << fmt_double(rep.max_defect) << "\n";
    return rep.pass ? 0 : 1;
  }

  if (n < 1) fail(Errc::InvalidParams, "dissect requires --n >= 1 or --tiling");
  GridDissection d = dissect(q, n, tol);
  CellReport rep = validate(d, tol);
  if (!out.empty()) {
    DissectionDocument dd{d.n, d.lattice, doc, rep.max_defect};
    write_file(out, write_dissection(dd));
  }
  std::cout << "cells: " << n * n
            << "\nrelabel offset: " << d.source.relabel_offset
            << "\nmax relative defect: " << fmt_double(rep.max_defect) << "\n";
  return rep.pass ? 0 : 1;
}

int run_verify(const std::string& input, double tol) {
  std::string text = read_file(input);
  CellReport rep;
  std::size_t cells = 0;
  if (looks_like_lattice(text)) {
    DissectionDocument dd = parse_dissection(text);
    GridDissection d;
    d.n = dd.n;
    d.lattice = dd.lattice;
    rep = validate(d, tol);
    cells = std::size_t(dd.n) * dd.n;
    // the lattice corners must still be the source quad
    ConvexQuad src = ccw(dd.source.quad());
    std::array<Point2, 4> corner{d.at(0, 0), d.at(d.n, 0), d.at(d.n, d.n),
                                 d.at(0, d.n)};
    double diam = diameter(src);
    bool corners_ok = false;
    for (int off = 0; off < 4 && !corners_ok; ++off) {
      bool all = true;
      for (int i = 0; i < 4; ++i)
        all = all && dist(corner[i], src[i + off]) <= 1e-8 * diam;
      corners_ok = all;
    }
    if (!corners_ok) {
      std::cout << "lattice corners do not match the source quad\n";
      rep.pass = false;
    }
  } else {
    CellsDocument cd = parse_cells(text);
    rep = validate_cells(cd.cells, tol);
    cells = cd.cells.size();
  }
  std::cout << "cells: " << cells
            << "\nmax relative defect: " << fmt_double(rep.max_defect)
            << "\nresult: " << (rep.pass ? "pass" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int run_centers(const std::string& input, double tol) {
  QuadDocument doc = load_quad(input);
  ConvexQuad q = doc.quad();
  CentersReport rep = centers_report(q, tol);
  auto put = [](const char* name, Point2 p) {
    std::cout << name << ": (" << fmt_double(p.u) << ", " << fmt_double(p.v)
              << ")\n";
  };
  put("I (incenter)", rep.I);
  put("S (diagonals)", rep.S);
  put("W (2x2 center)", rep.W);
  std::cout << "collinearity residual: " << fmt_double(rep.collinearity_residual)
            << "\nperpendicularity residual: "
            << fmt_double(rep.perpendicularity_residual) << "\n";
  auto [radii, defect] = reciprocal_check(q, tol);
  double rmin = std::min({radii.r_A, radii.r_B, radii.r_C, radii.r_D});
  std::cout << "2x2 inradii: " << fmt_double(radii.r_A) << " "
            << fmt_double(radii.r_B) << " " << fmt_double(radii.r_C) << " "
            << fmt_double(radii.r_D)
            << "\nreciprocal defect: " << fmt_double(defect) << "\n";
  double wu = wu_check(q);
  std::cout << "wu defect (normalized): " << fmt_double(wu) << "\n";
  bool ok = rep.collinearity_residual <= 1e-8 &&
            rep.perpendicularity_residual <= 1e-8 &&
            defect <= 1e-8 * (1.0 / rmin) && wu <= 1e-8;
  return ok ? 0 : 1;
}

int run_render(const std::string& input, const std::string& svg_path, int n,
               const SvgOptions& opt, double tol) {
  std::string text = read_file(input);
  GridDissection d;
  if (looks_like_lattice(text)) {
    DissectionDocument dd = parse_dissection(text);
    d = dissect(dd.source.quad(), dd.n, tol);
  } else {
    QuadDocument doc = parse_quad(text);
    d = dissect(doc.quad(), n, tol);
  }
  write_file(svg_path, render_svg(d, opt));
  std::cout << "wrote " << svg_path << "\n";
  return 0;
}

int run_random(std::uint64_t seed, int count, double min_gap,
               const std::string& out) {
  std::vector<ConvexQuad> quads = random_tangential(seed, count, min_gap);
  std::vector<QuadDocument> docs;
  docs.reserve(quads.size());
  for (const ConvexQuad& q : quads) docs.push_back(doc_from_quad(q));
  std::string bytes = write_quad_list(docs);
  if (out.empty())
    std::cout << bytes;
  else
    write_file(out, bytes);
  return 0;
}

int run_demo(const std::string& outdir, int n) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  ConvexQuad f1 = canonical_quad(GeneralParams::make(2, 2, 2));
  ConvexQuad f2 = canonical_quad(GeneralParams::make(2, 2, 4));
  ConvexQuad f3 =
      canonical_quad(TrapezoidParams::make(1, 1, 1 + std::numbers::sqrt2));

  auto emit = [&](const std::string& name, const GridDissection& d,
                  const SvgOptions& opt) {
    std::string path = (fs::path(outdir) / name).string();
    write_file(path, render_svg(d, opt));
    std::cout << "wrote " << path << "\n";
  };
  emit("fig1_grid.svg", dissect(f1, n), {.incircles = true});
  emit("fig7_trapezoid.svg", dissect(f3, n), {.incircles = true});
  emit("fig8_anchors.svg", dissect(f2, 2), {.anchors = true});
  emit("fig9_centers.svg", dissect(f1, 2), {.centers = true});
  emit("fig10_triple_grid.svg", dissect(f1, n), {.triple_grid = true});
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"class-preserving grid dissections of tangential quadrilaterals"};
  app.require_subcommand(1);

  std::string input, out, tiling, svg_path, outdir = "demo_out";
  double tol = 1e-9, min_gap = 0.15;
  int n = 1, demo_n = 3, count = 1;
  std::uint64_t seed = 0;
  SvgOptions svg_opt;

  CLI::App* check = app.add_subcommand("check", "classify a quad and test the Pitot condition");
  check->add_option("--input", input, "quad JSON file")->required();
  check->add_option("--tol", tol, "relative tolerance");

  CLI::App* dis = app.add_subcommand("dissect", "build an n x n (or tiling-based) dissection");
  dis->add_option("--input", input, "quad JSON file")->required();
  dis->add_option("--n", n, "grid order");
  dis->add_option("--tiling", tiling, "square-tiling JSON file");
  dis->add_option("--out", out, "output JSON file");
  dis->add_option("--tol", tol, "relative tolerance");

  CLI::App* ver = app.add_subcommand("verify", "re-validate a dissection file");
  ver->add_option("--input", input, "dissection JSON file")->required();
  ver->add_option("--tol", tol, "relative tolerance");

  CLI::App* cen = app.add_subcommand("centers", "I/S/W centers and inradius identities");
  cen->add_option("--input", input, "quad JSON file")->required();
  cen->add_option("--tol", tol, "relative tolerance");

  CLI::App* ren = app.add_subcommand("render", "render a dissection as SVG");
  ren->add_option("--input", input, "quad or dissection JSON file")->required();
  ren->add_option("--svg", svg_path, "output SVG file")->required();
  ren->add_option("--n", n, "grid order for quad input");
  ren->add_flag("--incircles", svg_opt.incircles, "draw cell incircles");
  ren->add_flag("--centers", svg_opt.centers, "mark I, S, W");
  ren->add_flag("--triple-grid", svg_opt.triple_grid, "mark the three point families");
  ren->add_option("--tol", tol, "relative tolerance");

  CLI::App* rnd = app.add_subcommand("random", "deterministic tangential quad corpus");
  rnd->add_option("--seed", seed, "RNG seed")->required();
  rnd->add_option("--count", count, "number of quads")->required();
  rnd->add_option("--min-gap", min_gap, "minimum tangent-angle gap (radians)");
  rnd->add_option("--out", out, "output file (stdout when omitted)");

  CLI::App* demo = app.add_subcommand("demo", "regenerate the standard figures");
  demo->add_option("--outdir", outdir, "output directory");
  demo->add_option("--n", demo_n, "grid order for the grid figures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(input, tol);
    if (dis->parsed()) return run_dissect(input, dis->count("--n") ? n : 0, tiling, out, tol);
    if (ver->parsed()) return run_verify(input, tol);
    if (cen->parsed()) return run_centers(input, tol);
    if (ren->parsed()) return run_render(input, svg_path, n, svg_opt, tol);
    if (rnd->parsed()) return run_random(seed, count, min_gap, out);
    if (demo->parsed()) return run_demo(outdir, demo_n);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tq
