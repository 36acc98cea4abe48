#include "tq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tq {

std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;  // collapse -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

namespace {

void append_point(std::string& s, Point2 p) {
  s += '[';
  s += fmt_double(p.u);
  s += ',';
  s += fmt_double(p.v);
  s += ']';
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

void append_vertices(std::string& s, const std::array<Point2, 4>& vs) {
  s += '[';
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    append_point(s, vs[i]);
  }
  s += ']';
}

void append_quad_object(std::string& s, const QuadDocument& d) {
  s += "{\"vertices\":";
  append_vertices(s, d.vertices);
  if (d.label) {
    s += ",\"label\":";
    s += quoted(*d.label);
  }
  s += '}';
}

}  // namespace

std::string write_quad(const QuadDocument& d) {
  std::string s;
  append_quad_object(s, d);
  s += '\n';
  return s;
}

std::string write_dissection(const DissectionDocument& d) {
  std::string s = "{\"n\":" + std::to_string(d.n) + ",\"lattice\":[";
  for (std::size_t i = 0; i < d.lattice.size(); ++i) {
    if (i) s += ',';
    append_point(s, d.lattice[i]);
  }
  s += "],\"source\":";
  append_quad_object(s, d.source);
  s += ",\"max_defect\":";
  s += fmt_double(d.max_defect);
  s += "}\n";
  return s;
}

std::string write_cells(const CellsDocument& d) {
  std::string s = "{\"source\":";
  append_quad_object(s, d.source);
  s += ",\"cells\":[";
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    if (i) s += ',';
    append_vertices(s, d.cells[i]);
  }
  s += "],\"incircles\":[";
  for (std::size_t i = 0; i < d.incircles.size(); ++i) {
    if (i) s += ',';
    s += '[';
    s += fmt_double(d.incircles[i].center.u);
    s += ',';
    s += fmt_double(d.incircles[i].center.v);
    s += ',';
    s += fmt_double(d.incircles[i].radius);
    s += ']';
  }
  s += "],\"max_defect\":";
  s += fmt_double(d.max_defect);
  s += "}\n";
  return s;
}

std::string write_quad_list(const std::vector<QuadDocument>& quads) {
  std::string s = "{\"quads\":[";
  for (std::size_t i = 0; i < quads.size(); ++i) {
    if (i) s += ',';
    s += '\n';
    append_quad_object(s, quads[i]);
  }
  s += "\n]}\n";
  return s;
}

std::string write_tiling(const SquareTiling& t) {
  std::string s = "{\"squares\":[";
  for (std::size_t i = 0; i < t.squares.size(); ++i) {
    if (i) s += ',';
    s += '[';
    s += fmt_double(t.squares[i].x0);
    s += ',';
    s += fmt_double(t.squares[i].y0);
    s += ',';
    s += fmt_double(t.squares[i].side);
    s += ']';
  }
  s += "]}\n";
  return s;
}

namespace {

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Point2 point_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(Errc::ParseError, std::string(what) + ": expected a [u,v] pair");
  Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(p.u) || !std::isfinite(p.v))
    fail(Errc::ParseError, std::string(what) + ": coordinate is not finite");
  return p;
}

QuadDocument quad_from(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    fail(Errc::ParseError, "quad: expected an object with \"vertices\"");
  const auto& vs = j["vertices"];
  if (!vs.is_array() || vs.size() != 4)
    fail(Errc::ParseError, "quad: \"vertices\" must be an array of 4 points");
  QuadDocument d;
  for (int i = 0; i < 4; ++i) d.vertices[i] = point_from(vs[i], "vertex");
  if (j.contains("label")) {
    if (!j["label"].is_string())
      fail(Errc::ParseError, "quad: \"label\" must be a string");
    d.label = j["label"].get<std::string>();
  }
  return d;
}

}  // namespace

QuadDocument parse_quad(const std::string& text) {
  return quad_from(parse_json(text));
}

DissectionDocument parse_dissection(const std::string& text) {
  nlohmann::json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("lattice") ||
      !j.contains("source"))
    fail(Errc::ParseError, "dissection: expected n, lattice, source");
  DissectionDocument d;
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    fail(Errc::ParseError, "dissection: n must be a positive integer");
  d.n = j["n"].get<int>();
  const auto& lat = j["lattice"];
  std::size_t expected = std::size_t(d.n + 1) * std::size_t(d.n + 1);
  if (!lat.is_array() || lat.size() != expected)
    fail(Errc::ParseError, "dissection: lattice must hold (n+1)^2 points");
  d.lattice.reserve(expected);
  for (const auto& p : lat) d.lattice.push_back(point_from(p, "lattice point"));
  d.source = quad_from(j["source"]);
  d.max_defect = j.value("max_defect", 0.0);
  return d;
}

CellsDocument parse_cells(const std::string& text) {
  nlohmann::json j = parse_json(text);
  if (!j.is_object() || !j.contains("cells") || !j.contains("source"))
    fail(Errc::ParseError, "cells: expected source and cells");
  CellsDocument d;
  d.source = quad_from(j["source"]);
  for (const auto& c : j["cells"]) {
    if (!c.is_array() || c.size() != 4)
      fail(Errc::ParseError, "cells: each cell must hold 4 points");
    std::array<Point2, 4> vs;
    for (int i = 0; i < 4; ++i) vs[i] = point_from(c[i], "cell vertex");
    d.cells.push_back(vs);
  }
  if (j.contains("incircles")) {
    for (const auto& c : j["incircles"]) {
      if (!c.is_array() || c.size() != 3)
        fail(Errc::ParseError, "cells: incircle must be [cu,cv,r]");
      d.incircles.push_back(
          {{c[0].get<double>(), c[1].get<double>()}, c[2].get<double>()});
    }
  }
  d.max_defect = j.value("max_defect", 0.0);
  return d;
}

SquareTiling parse_tiling(const std::string& text) {
  nlohmann::json j = parse_json(text);
  if (!j.is_object() || !j.contains("squares") || !j["squares"].is_array())
    fail(Errc::ParseError, "tiling: expected an object with \"squares\"");
  SquareTiling t;
  for (const auto& s : j["squares"]) {
    if (!s.is_array() || s.size() != 3)
      fail(Errc::ParseError, "tiling: each square must be [x0,y0,side]");
    t.squares.push_back(
        {s[0].get<double>(), s[1].get<double>(), s[2].get<double>()});
  }
  return t;
}

bool looks_like_lattice(const std::string& text) {
  nlohmann::json j = parse_json(text);
  return j.is_object() && j.contains("lattice");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << bytes;
}

}  // namespace tq
