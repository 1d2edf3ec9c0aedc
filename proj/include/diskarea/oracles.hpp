#pragma once

// Independent numerical estimates of area(disk ∩ polygon). They share no code
// path with the exact triangulation route and exist to validate it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "diskarea/geom_core.hpp"
#include "diskarea/polygon.hpp"

namespace diskarea {

enum class OracleMethod { grid, monte_carlo };

struct OracleReport {
  double estimate = 0.0;
  double accuracy_bound = 0.0;  // half-width of the error band around estimate
  OracleMethod method = OracleMethod::grid;
  std::uint64_t effort = 0;     // cells or samples
};

namespace detail {

struct Box {
  double x0, y0, x1, y1;
};

// Length of the part of segment ab inside the box (Liang-Barsky clipping).
inline double clipped_length(Point2 a, Point2 b, const Box& box) {
  double t0 = 0.0, t1 = 1.0;
  const Point2 d = b - a;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - box.x0, box.x1 - a.x, a.y - box.y0, box.y1 - a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return 0.0;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return 0.0;
  }
  return (t1 - t0) * norm(d);
}

}  // namespace detail

/// Midpoint-rule quadrature of the indicator of disk ∩ polygon.
///
/// The grid covers the bounding box of the disk clipped to that of the
/// polygon. A cell can only be misclassified when it meets the boundary of the
/// intersection, so the error is at most the area of the cell-diagonal
/// neighbourhood of circle plus polygon edges inside the grid.
inline OracleReport grid_oracle(const Polygon& s, Point2 p, double d, std::size_t cells_per_axis) {
  if (cells_per_axis < 100) {
    throw GeometryError(ErrorKind::InvalidArgument, "grid oracle needs at least 100 cells per axis");
  }
  if (!(d > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "radius must be positive");

  detail::Box poly_box{INFINITY, INFINITY, -INFINITY, -INFINITY};
  for (const Point2& v : s.vertices()) {
    poly_box.x0 = std::min(poly_box.x0, v.x);
    poly_box.y0 = std::min(poly_box.y0, v.y);
    poly_box.x1 = std::max(poly_box.x1, v.x);
    poly_box.y1 = std::max(poly_box.y1, v.y);
  }
  detail::Box box{std::max(p.x - d, poly_box.x0), std::max(p.y - d, poly_box.y0),
                  std::min(p.x + d, poly_box.x1), std::min(p.y + d, poly_box.y1)};
  if (!(box.x1 > box.x0) || !(box.y1 > box.y0)) box = {p.x - d, p.y - d, p.x + d, p.y + d};

  const std::size_t n_cells = cells_per_axis;
  const double wx = (box.x1 - box.x0) / static_cast<double>(n_cells);
  const double wy = (box.y1 - box.y0) / static_cast<double>(n_cells);
  const auto last = static_cast<long long>(n_cells) - 1;

  std::vector<double> xs;
  xs.reserve(s.size());
  std::uint64_t hits = 0;
  for (std::size_t row = 0; row < n_cells; ++row) {
    const double y = box.y0 + (static_cast<double>(row) + 0.5) * wy;
    const double dy = y - p.y;
    if (std::abs(dy) > d) continue;
    const double half_chord = std::sqrt(d * d - dy * dy);
    const double disk_lo = p.x - half_chord, disk_hi = p.x + half_chord;

    xs.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Point2 a = s.vertex(i), b = s.vertex(i + 1);
      if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const double lo = std::max(xs[k], disk_lo);
      const double hi = std::min(xs[k + 1], disk_hi);
      if (hi < lo) continue;
      const auto j0 = std::max(0LL, static_cast<long long>(std::ceil((lo - box.x0) / wx - 0.5)));
      const auto j1 = std::min(last, static_cast<long long>(std::floor((hi - box.x0) / wx - 0.5)));
      if (j1 >= j0) hits += static_cast<std::uint64_t>(j1 - j0 + 1);
    }
  }

  double boundary_length = 2.0 * kPi * d;
  for (std::size_t i = 0; i < s.size(); ++i) {
    boundary_length += detail::clipped_length(s.vertex(i), s.vertex(i + 1), box);
  }
  const double diag = std::hypot(wx, wy);
  OracleReport out;
  out.method = OracleMethod::grid;
  out.effort = static_cast<std::uint64_t>(n_cells) * n_cells;
  out.estimate = static_cast<double>(hits) * wx * wy;
  out.accuracy_bound =
      2.0 * diag * boundary_length + kPi * diag * diag * static_cast<double>(s.size() + 1);
  return out;
}

/// Uniform sampling of the disk (polar transform, no rejection); the hit
/// fraction times the disk area estimates the intersection area.
inline OracleReport monte_carlo_oracle(const Polygon& s, Point2 p, double d, std::size_t samples,
                                       std::uint64_t seed) {
  if (samples < 10000) {
    throw GeometryError(ErrorKind::InvalidArgument, "monte carlo oracle needs at least 1e4 samples");
  }
  if (!(d > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "radius must be positive");
  std::mt19937_64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = d * std::sqrt(detail::uniform01(rng));
    const double theta = 2.0 * kPi * detail::uniform01(rng);
    const Point2 q{p.x + r * std::cos(theta), p.y + r * std::sin(theta)};
    if (crossing_number(q, s) % 2 == 1) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double frac = static_cast<double>(hits) / n;
  const double disk_area = kPi * d * d;
  // p(1-p) floored at 1/n keeps the band positive when every sample agrees.
  const double variance = std::max(frac * (1.0 - frac), 1.0 / n) / n;
  OracleReport out;
  out.method = OracleMethod::monte_carlo;
  out.effort = samples;
  out.estimate = frac * disk_area;
  out.accuracy_bound = 3.0 * std::sqrt(variance) * disk_area;
  return out;
}

}  // namespace diskarea
