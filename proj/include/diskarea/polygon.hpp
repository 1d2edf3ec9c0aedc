#pragma once

// Simple polygons: validation, containment, distances, ear-clipping
// triangulation and the random star-shaped generator used by the benchmark.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskarea/geom_core.hpp"

namespace diskarea {

namespace detail {

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

inline bool on_segment_closed(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segment intersection with exact orientation signs.
inline bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = sign_of(orient(a, b, c));
  const int o2 = sign_of(orient(a, b, d));
  const int o3 = sign_of(orient(c, d, a));
  const int o4 = sign_of(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment_closed(a, b, c)) return true;
  if (o2 == 0 && on_segment_closed(a, b, d)) return true;
  if (o3 == 0 && on_segment_closed(c, d, a)) return true;
  if (o4 == 0 && on_segment_closed(c, d, b)) return true;
  return false;
}

}  // namespace detail

/// A simple polygon S1..Sn stored without repeating the first vertex.
/// Either orientation is accepted.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices, const EpsilonPolicy& eps = {})
      : vertices_(std::move(vertices)) {
    validate(eps);
  }

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Twice the signed area; positive for counter-clockwise vertex order.
  double signed_area2() const {
    double s = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(vertices_[i], vertices_[(i + 1) % n]);
    return s;
  }

  double perimeter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += distance(vertex(i), vertex(i + 1));
    return s;
  }

 private:
  void validate(const EpsilonPolicy& eps) const {
    const std::size_t n = vertices_.size();
    if (n < 3) throw GeometryError(ErrorKind::TooFewVertices, "a polygon needs at least 3 vertices");
    for (const Point2& p : vertices_) {
      if (!is_finite(p)) throw GeometryError(ErrorKind::InvalidArgument, "non-finite vertex");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (distance(vertices_[i], vertices_[(i + 1) % n]) <= eps.geometry) {
        throw GeometryError(ErrorKind::NotSimple,
                            "consecutive vertices coincide at index " + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 a = vertices_[i], b = vertices_[(i + 1) % n];
      // Adjacent edge folding back over this one.
      const Point2 c = vertices_[(i + 2) % n];
      if (detail::sign_of(orient(a, b, c)) == 0 && dot(b - a, c - b) < 0.0) {
        throw GeometryError(ErrorKind::NotSimple,
                            "edges overlap at vertex " + std::to_string((i + 1) % n));
      }
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (detail::segments_intersect(a, b, vertices_[j], vertices_[(j + 1) % n])) {
          throw GeometryError(ErrorKind::NotSimple, "edges " + std::to_string(i) + " and " +
                                                        std::to_string(j) + " intersect");
        }
      }
    }
    if (signed_area2() == 0.0) throw GeometryError(ErrorKind::NotSimple, "polygon has zero area");
  }

  std::vector<Point2> vertices_;
};

inline double polygon_area(const Polygon& s) { return 0.5 * std::abs(s.signed_area2()); }

/// Crossings of the rightward horizontal ray from p with the boundary.
/// An edge counts when one endpoint is strictly above the ray and the other
/// at or below it.
inline std::size_t crossing_number(Point2 p, const Polygon& s) {
  std::size_t count = 0;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = s[i];
    const Point2 b = s[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) ++count;
    }
  }
  return count;
}

inline double boundary_distance(Point2 p, const Polygon& s) {
  double best = INFINITY;
  for (std::size_t i = 0; i < s.size(); ++i) {
    best = std::min(best, point_segment_distance(p, s.vertex(i), s.vertex(i + 1)));
  }
  return best;
}

/// Closed containment: on the boundary (within eps.geometry) or odd crossing number.
inline bool contains(const Polygon& s, Point2 p, const EpsilonPolicy& eps = {}) {
  return boundary_distance(p, s) <= eps.geometry || crossing_number(p, s) % 2 == 1;
}

struct BoundaryDistances {
  double dmin = 0.0;
  double dmax = 0.0;
};

/// Support of the distance from p to a uniform point of s: dmin is zero when
/// p lies in the closed polygon, dmax is the largest vertex distance.
inline BoundaryDistances boundary_distances(Point2 p, const Polygon& s,
                                            const EpsilonPolicy& eps = {}) {
  BoundaryDistances out;
  const double to_boundary = boundary_distance(p, s);
  const bool inside = to_boundary <= eps.geometry || crossing_number(p, s) % 2 == 1;
  out.dmin = inside ? 0.0 : to_boundary;
  for (const Point2& v : s.vertices()) out.dmax = std::max(out.dmax, distance(p, v));
  return out;
}

struct Triangulation {
  std::vector<std::array<std::size_t, 3>> indices;
  std::vector<Triangle> triangles;

  std::size_t size() const { return triangles.size(); }
};

/// Ear-clipping triangulation in O(n^2); works for either orientation.
inline Triangulation triangulate(const Polygon& s) {
  const std::size_t n = s.size();
  if (n < 3) throw GeometryError(ErrorKind::TooFewVertices, "a polygon needs at least 3 vertices");
  const double orientation = s.signed_area2() > 0.0 ? 1.0 : -1.0;

  std::vector<std::size_t> prev(n), next(n);
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = (i + n - 1) % n;
    next[i] = (i + 1) % n;
  }

  const auto blocked = [&](std::size_t v) {
    const std::size_t u = prev[v], w = next[v];
    const Point2 a = s[u], b = s[v], c = s[w];
    for (std::size_t k = next[w]; k != u; k = next[k]) {
      const Point2 q = s[k];
      if (q == a || q == b || q == c) continue;
      const double o1 = orientation * orient(a, b, q);
      const double o2 = orientation * orient(b, c, q);
      const double o3 = orientation * orient(c, a, q);
      if (o1 >= 0.0 && o2 >= 0.0 && o3 >= 0.0) return true;
    }
    return false;
  };
  const auto is_ear = [&](std::size_t v) {
    if (orientation * orient(s[prev[v]], s[v], s[next[v]]) <= 0.0) return false;
    return !blocked(v);
  };

  std::vector<char> ear(n);
  for (std::size_t i = 0; i < n; ++i) ear[i] = is_ear(i) ? 1 : 0;

  Triangulation out;
  out.indices.reserve(n - 2);
  out.triangles.reserve(n - 2);
  const auto clip = [&](std::size_t v) {
    const std::size_t u = prev[v], w = next[v];
    out.indices.push_back({u, v, w});
    out.triangles.push_back({s[u], s[v], s[w]});
    next[u] = w;
    prev[w] = u;
  };

  std::size_t remaining = n;
  std::size_t cursor = 0;
  while (remaining > 3) {
    bool clipped = false;
    for (std::size_t step = 0; step < remaining; ++step, cursor = next[cursor]) {
      if (!ear[cursor]) continue;
      const std::size_t u = prev[cursor], w = next[cursor];
      clip(cursor);
      --remaining;
      ear[u] = is_ear(u) ? 1 : 0;
      ear[w] = is_ear(w) ? 1 : 0;
      cursor = w;
      clipped = true;
      break;
    }
    if (clipped) continue;
    // Only flat vertices are left to remove; clip one that hides no vertex.
    for (std::size_t step = 0; step < remaining; ++step, cursor = next[cursor]) {
      if (orient(s[prev[cursor]], s[cursor], s[next[cursor]]) == 0.0 && !blocked(cursor)) {
        const std::size_t u = prev[cursor], w = next[cursor];
        clip(cursor);
        --remaining;
        ear[u] = is_ear(u) ? 1 : 0;
        ear[w] = is_ear(w) ? 1 : 0;
        cursor = w;
        clipped = true;
        break;
      }
    }
    if (!clipped) throw GeometryError(ErrorKind::NotSimple, "no ear found; polygon is not simple");
  }
  clip(cursor);
  return out;
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Random star-shaped polygon with 4n vertices: n per quadrant, polar angle
/// uniform within the quadrant, radius uniform on (0, r0], sorted by angle.
inline Polygon generate_star_polygon(std::size_t n, double r0, std::uint64_t seed) {
  if (n < 1) throw GeometryError(ErrorKind::InvalidArgument, "need at least one point per quadrant");
  if (!(r0 > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "r0 must be positive");
  std::mt19937_64 rng(seed);

  struct Polar {
    double angle;
    double radius;
  };
  const auto sample = [&](std::size_t quadrant) {
    Polar p{};
    p.angle = (static_cast<double>(quadrant) + detail::uniform01(rng)) * (kPi / 2.0);
    do {
      p.radius = r0 * detail::uniform01(rng);
    } while (p.radius == 0.0);
    return p;
  };

  std::vector<Polar> pts;
  pts.reserve(4 * n);
  for (std::size_t q = 0; q < 4; ++q) {
    for (std::size_t i = 0; i < n; ++i) pts.push_back(sample(q));
  }
  const auto by_angle = [](const Polar& a, const Polar& b) { return a.angle < b.angle; };
  std::sort(pts.begin(), pts.end(), by_angle);
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i + 1].angle - pts[i].angle < 1e-12) {
        const auto quadrant = static_cast<std::size_t>(pts[i + 1].angle / (kPi / 2.0));
        pts[i + 1] = sample(std::min<std::size_t>(quadrant, 3));
        clash = true;
      }
    }
    if (clash) std::sort(pts.begin(), pts.end(), by_angle);
  }

  std::vector<Point2> vertices;
  vertices.reserve(pts.size());
  for (const Polar& p : pts) {
    vertices.push_back({p.radius * std::cos(p.angle), p.radius * std::sin(p.angle)});
  }
  return Polygon(std::move(vertices), EpsilonPolicy::for_scale(r0));
}

}  // namespace diskarea
