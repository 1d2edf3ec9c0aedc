#pragma once

// Distribution of D = |PQ| for Q uniform in a source set S:
//   F(d) = measure(B(P, d) ∩ S) / measure(S),
// supported on [dmin, dmax]. Densities are central differences of F.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <thread>
#include <vector>

#include "diskarea/disk_polygon.hpp"
#include "diskarea/geom_core.hpp"
#include "diskarea/polygon.hpp"

namespace diskarea {

enum class SourceKind { polygon, disk, ball, segment };

inline const char* to_string(SourceKind k) {
  switch (k) {
    case SourceKind::polygon: return "polygon";
    case SourceKind::disk: return "disk";
    case SourceKind::ball: return "ball";
    case SourceKind::segment: return "segment";
  }
  return "unknown";
}

struct DistanceDistribution {
  double dmin = 0.0;
  double dmax = 0.0;
  SourceKind kind = SourceKind::polygon;
  std::function<double(double)> cdf;

  double operator()(double d) const { return cdf(d); }
};

// ---- closed forms --------------------------------------------------------

inline double cdf_polygon(const Polygon& s, Point2 p, double d, const Triangulation& tri) {
  if (!(d > 0.0)) return 0.0;
  const double a = disk_polygon_area(s, p, d, tri, EpsilonPolicy::for_scale(d));
  return std::clamp(a / polygon_area(s), 0.0, 1.0);
}

inline double cdf_polygon(const Polygon& s, Point2 p, double d) {
  return cdf_polygon(s, p, d, triangulate(s));
}

namespace detail {

// Area of the intersection of two disks with radii r1, r2 and centres s apart.
inline double two_disk_area(double r1, double r2, double s) {
  if (s >= r1 + r2) return 0.0;
  const double rmin = std::min(r1, r2);
  if (s <= std::abs(r1 - r2)) return kPi * rmin * rmin;
  const double c1 = std::clamp((s * s + r1 * r1 - r2 * r2) / (2.0 * s * r1), -1.0, 1.0);
  const double c2 = std::clamp((s * s + r2 * r2 - r1 * r1) / (2.0 * s * r2), -1.0, 1.0);
  const double k = (-s + r1 + r2) * (s + r1 - r2) * (s - r1 + r2) * (s + r1 + r2);
  return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(std::max(k, 0.0));
}

// Volume of the intersection of two balls (sum of two spherical caps).
inline double two_ball_volume(double r1, double r2, double s) {
  if (s >= r1 + r2) return 0.0;
  const double rmin = std::min(r1, r2);
  if (s <= std::abs(r1 - r2)) return 4.0 / 3.0 * kPi * rmin * rmin * rmin;
  const double g = r1 + r2 - s;
  return kPi * g * g * (s * s + 2.0 * s * (r1 + r2) - 3.0 * (r1 - r2) * (r1 - r2)) / (12.0 * s);
}

inline void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw GeometryError(ErrorKind::InvalidArgument, "source radius must be positive");
  }
}

}  // namespace detail

inline double cdf_disk_source(Point2 center, double rho, Point2 p, double d) {
  detail::check_rho(rho);
  if (!(d > 0.0)) return 0.0;
  const double s = distance(p, center);
  if (d >= s + rho) return 1.0;
  return std::clamp(detail::two_disk_area(d, rho, s) / (kPi * rho * rho), 0.0, 1.0);
}

inline double cdf_ball_source(Point3 center, double rho, Point3 p, double d) {
  detail::check_rho(rho);
  if (!(d > 0.0)) return 0.0;
  const double s = distance(p, center);
  if (d >= s + rho) return 1.0;
  const double v = detail::two_ball_volume(d, rho, s) / (4.0 / 3.0 * kPi * rho * rho * rho);
  return std::clamp(v, 0.0, 1.0);
}

inline double cdf_segment_source(Point2 a, Point2 b, Point2 p, double d) {
  const Point2 u = b - a;
  const double len = norm(u);
  if (!(len > 0.0)) throw GeometryError(ErrorKind::DegenerateSegment, "segment endpoints coincide");
  if (!(d > 0.0)) return 0.0;
  const Point2 w = p - a;
  const double h = std::abs(cross(u, w)) / len;  // distance from p to the line
  if (d < h) return 0.0;
  const double t0 = dot(u, w) / (len * len);
  const double half = std::sqrt(std::max(d * d - h * h, 0.0)) / len;
  const double lo = std::max(t0 - half, 0.0);
  const double hi = std::min(t0 + half, 1.0);
  return std::clamp(hi - lo, 0.0, 1.0);
}

/// Density of the distance from the centre of an L x alpha*L rectangle
/// (alpha <= 1). Up to the half-diagonal the disk of radius x only crosses the
/// edges, each in a circular segment whose area grows at rate 2x*acos(h/x).
inline double rectangle_center_reference(double L, double alpha, double x) {
  if (!(L > 0.0) || !(alpha > 0.0) || alpha > 1.0) {
    throw GeometryError(ErrorKind::InvalidArgument, "need L > 0 and alpha in (0, 1]");
  }
  const double a = L / 2.0, b = alpha * L / 2.0;
  if (x <= 0.0 || x >= std::hypot(a, b)) return 0.0;
  double rate = 2.0 * kPi * x;
  if (x > b) rate -= 4.0 * x * std::acos(b / x);
  if (x > a) rate -= 4.0 * x * std::acos(a / x);
  return std::max(rate, 0.0) / (4.0 * a * b);
}

/// CDF matching rectangle_center_reference.
inline double rectangle_center_cdf(double L, double alpha, double x) {
  if (!(L > 0.0) || !(alpha > 0.0) || alpha > 1.0) {
    throw GeometryError(ErrorKind::InvalidArgument, "need L > 0 and alpha in (0, 1]");
  }
  const double a = L / 2.0, b = alpha * L / 2.0;
  if (x <= 0.0) return 0.0;
  if (x >= std::hypot(a, b)) return 1.0;
  const auto seg = [x](double h) {
    return x * x * std::acos(h / x) - h * std::sqrt(std::max(x * x - h * h, 0.0));
  };
  double area = kPi * x * x;
  if (x > b) area -= 2.0 * seg(b);
  if (x > a) area -= 2.0 * seg(a);
  return std::clamp(area / (4.0 * a * b), 0.0, 1.0);
}

// ---- distributions -------------------------------------------------------

/// The triangulation is built once and shared by every CDF evaluation.
inline DistanceDistribution polygon_distribution(const Polygon& s, Point2 p) {
  const BoundaryDistances bd = boundary_distances(p, s, EpsilonPolicy::for_scale(s.perimeter()));
  auto poly = std::make_shared<const Polygon>(s);
  auto tri = std::make_shared<const Triangulation>(triangulate(s));
  DistanceDistribution out;
  out.dmin = bd.dmin;
  out.dmax = bd.dmax;
  out.kind = SourceKind::polygon;
  out.cdf = [poly, tri, p, dmax = bd.dmax](double d) {
    if (d >= dmax) return 1.0;
    return cdf_polygon(*poly, p, d, *tri);
  };
  return out;
}

inline DistanceDistribution disk_distribution(Point2 center, double rho, Point2 p) {
  detail::check_rho(rho);
  const double s = distance(p, center);
  DistanceDistribution out;
  out.dmin = std::max(0.0, s - rho);
  out.dmax = s + rho;
  out.kind = SourceKind::disk;
  out.cdf = [=](double d) { return cdf_disk_source(center, rho, p, d); };
  return out;
}

inline DistanceDistribution ball_distribution(Point3 center, double rho, Point3 p) {
  detail::check_rho(rho);
  const double s = distance(p, center);
  DistanceDistribution out;
  out.dmin = std::max(0.0, s - rho);
  out.dmax = s + rho;
  out.kind = SourceKind::ball;
  out.cdf = [=](double d) { return cdf_ball_source(center, rho, p, d); };
  return out;
}

inline DistanceDistribution segment_distribution(Point2 a, Point2 b, Point2 p) {
  if (!(distance(a, b) > 0.0)) {
    throw GeometryError(ErrorKind::DegenerateSegment, "segment endpoints coincide");
  }
  DistanceDistribution out;
  out.dmin = point_segment_distance(p, a, b);
  out.dmax = std::max(distance(p, a), distance(p, b));
  out.kind = SourceKind::segment;
  out.cdf = [=](double d) { return cdf_segment_source(a, b, p, d); };
  return out;
}

// ---- density grids -------------------------------------------------------

struct DensityGrid {
  std::vector<double> points;
  std::vector<double> values;
  double dmin = 0.0;
  double dmax = 0.0;
  double elapsed_s = 0.0;
  unsigned threads = 1;

  std::size_t size() const { return points.size(); }
};

namespace detail {

template <class F>
void parallel_for(std::size_t n, unsigned threads, const F& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

// x_i = dmin + i*dx for i = 1..np with dx = (dmax - dmin)/(np + 1), and
// f(x_i) = (F(x_i + dx/2) - F(x_i - dx/2)) / dx. Neighbouring stencils share
// their end points, so F is evaluated np + 1 times.
inline DensityGrid sweep(const DistanceDistribution& dist, std::size_t np, unsigned threads) {
  if (np < 2) throw GeometryError(ErrorKind::InvalidArgument, "np must be at least 2");
  DensityGrid g;
  g.dmin = dist.dmin;
  g.dmax = dist.dmax;
  g.threads = std::max(1u, threads);
  const double dx = (dist.dmax - dist.dmin) / static_cast<double>(np + 1);
  std::vector<double> edge_cdf(np + 1);
  parallel_for(np + 1, g.threads, [&](std::size_t j) {
    edge_cdf[j] = dist.cdf(dist.dmin + (static_cast<double>(j) + 0.5) * dx);
  });
  g.points.resize(np);
  g.values.resize(np);
  for (std::size_t i = 0; i < np; ++i) {
    g.points[i] = dist.dmin + static_cast<double>(i + 1) * dx;
    g.values[i] = dx > 0.0 ? std::max(edge_cdf[i + 1] - edge_cdf[i], 0.0) / dx : 0.0;
  }
  return g;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Density grid of an already built distribution; elapsed_s covers the sweep.
inline DensityGrid density_of(const DistanceDistribution& dist, std::size_t np,
                              unsigned threads = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  DensityGrid g = detail::sweep(dist, np, threads);
  g.elapsed_s = detail::seconds_since(t0);
  return g;
}

/// elapsed_s covers triangulation, support computation and the sweep.
inline DensityGrid density_polygon(const Polygon& s, Point2 p, std::size_t np,
                                   unsigned threads = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  DensityGrid g = detail::sweep(polygon_distribution(s, p), np, threads);
  g.elapsed_s = detail::seconds_since(t0);
  return g;
}

/// Trapezoid rule over the grid; the end values are held flat out to dmin and dmax.
inline double integrate(const DensityGrid& g) {
  if (g.points.empty()) return 0.0;
  double sum = g.values.front() * (g.points.front() - g.dmin) +
               g.values.back() * (g.dmax - g.points.back());
  for (std::size_t i = 1; i < g.size(); ++i) {
    sum += 0.5 * (g.values[i] + g.values[i - 1]) * (g.points[i] - g.points[i - 1]);
  }
  return sum;
}

}  // namespace diskarea
