#pragma once

// Text formats: polygon CSV (closed ring of "x,y" lines) and density grid CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "diskarea/distance_distribution.hpp"
#include "diskarea/polygon.hpp"

namespace diskarea {

/// 17 significant digits, enough to read back the same double.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& text, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(text.substr(used)) != "" || !std::isfinite(v)) {
    throw GeometryError(ErrorKind::ParseError,
                        "line " + std::to_string(line) + ": not a number: '" + text + "'");
  }
  return v;
}

}  // namespace detail

/// Parses "x,y" lines; blank lines and lines starting with '#' are skipped.
/// The last vertex must repeat the first within eps.geometry.
inline Polygon read_polygon_csv(std::istream& in, const EpsilonPolicy& eps = {}) {
  std::vector<Point2> pts;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = detail::trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
      throw GeometryError(ErrorKind::ParseError,
                          "line " + std::to_string(line) + ": expected 'x,y'");
    }
    pts.push_back({detail::parse_double(detail::trim(s.substr(0, comma)), line),
                   detail::parse_double(detail::trim(s.substr(comma + 1)), line)});
  }
  if (pts.size() < 2 || distance(pts.front(), pts.back()) > eps.geometry) {
    throw GeometryError(ErrorKind::ParseError, "polygon is not closed: last line must repeat the first");
  }
  pts.pop_back();
  return Polygon(std::move(pts), eps);
}

inline Polygon read_polygon_csv_file(const std::string& path, const EpsilonPolicy& eps = {}) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorKind::ParseError, "cannot open " + path);
  return read_polygon_csv(in, eps);
}

inline void write_polygon_csv(std::ostream& out, const Polygon& s) {
  for (const Point2& v : s.vertices()) out << format_number(v.x) << ',' << format_number(v.y) << '\n';
  out << format_number(s[0].x) << ',' << format_number(s[0].y) << '\n';
}

inline void write_density_csv(std::ostream& out, const DensityGrid& g) {
  out << "x,density\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << format_number(g.points[i]) << ',' << format_number(g.values[i]) << '\n';
  }
  out << "# dmin=" << format_number(g.dmin) << '\n'
      << "# dmax=" << format_number(g.dmax) << '\n'
      << "# elapsed_s=" << format_number(g.elapsed_s) << '\n'
      << "# threads=" << g.threads << '\n';
}

/// One disk ∩ triangle configuration with its expected dispatch and area.
struct TriangleFixture {
  int code = 0;
  std::string branch;
  Triangle triangle;
  Circle circle;
  double area = 0.0;
};

/// Columns: code,branch,ax,ay,bx,by,cx,cy,px,py,r,area. A header line starting
/// with "code" and '#' comment lines are skipped.
inline std::vector<TriangleFixture> read_triangle_fixtures(std::istream& in) {
  std::vector<TriangleFixture> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = detail::trim(raw);
    if (s.empty() || s[0] == '#' || s.rfind("code", 0) == 0) continue;
    std::vector<std::string> f;
    std::stringstream ss(s);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(detail::trim(cell));
    if (f.size() != 12) {
      throw GeometryError(ErrorKind::ParseError,
                          "line " + std::to_string(line) + ": expected 12 fields");
    }
    std::vector<double> v;
    for (std::size_t i = 2; i < 12; ++i) v.push_back(detail::parse_double(f[i], line));
    TriangleFixture fx;
    fx.code = static_cast<int>(detail::parse_double(f[0], line));
    fx.branch = f[1];
    fx.triangle = {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
    fx.circle = {{v[6], v[7]}, v[8]};
    fx.area = v[9];
    out.push_back(fx);
  }
  return out;
}

inline void write_triangle_fixture(std::ostream& out, const TriangleFixture& fx) {
  const Triangle& t = fx.triangle;
  out << fx.code << ',' << fx.branch;
  for (const double v : {t.a.x, t.a.y, t.b.x, t.b.y, t.c.x, t.c.y, fx.circle.center.x,
                         fx.circle.center.y, fx.circle.radius, fx.area}) {
    out << ',' << format_number(v);
  }
  out << '\n';
}

}  // namespace diskarea
