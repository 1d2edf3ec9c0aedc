#pragma once

// Planar primitives and the low-level predicates every other module builds on.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>

#include "diskarea/errors.hpp"

namespace diskarea {

inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Point3 a, Point3 b) = default;
};

struct Segment {
  Point2 a;
  Point2 b;
};

struct Circle {
  Point2 center;
  double radius = 1.0;
};

struct Triangle {
  Point2 a;
  Point2 b;
  Point2 c;
};

/// Tolerances used by every predicate in the library.
///
/// `on_circle` decides when |d - R| counts as "on the circle"; `geometry`
/// decides coincidence and collinearity. The on-circle tolerance is never
/// tighter than the geometric one.
struct EpsilonPolicy {
  double on_circle = 1e-9;
  double geometry = 1e-12;

  /// Defaults scaled to the problem size (typically the disk radius).
  static EpsilonPolicy for_scale(double scale) {
    const double s = std::max(std::abs(scale), 1.0);
    return {1e-9 * s, 1e-12 * s};
  }

  void validate() const {
    if (!(on_circle > 0.0) || !(geometry > 0.0) || on_circle < geometry) {
      throw GeometryError(ErrorKind::InvalidArgument,
                          "epsilon policy requires on_circle >= geometry > 0");
    }
  }
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Point2 v) { return std::hypot(v.x, v.y); }
inline double norm(Point3 v) { return std::sqrt(dot(v, v)); }

inline double distance(Point2 p, Point2 q) { return norm(q - p); }
inline double distance(Point3 p, Point3 q) { return norm(q - p); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Point3 p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

/// Unsigned area of triangle abc (shoelace form).
inline double triangle_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * std::abs(a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
}

inline double triangle_area(const Triangle& t) { return triangle_area(t.a, t.b, t.c); }

/// Twice the signed area of abc; positive when counter-clockwise.
constexpr double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

/// True unless c and p lie strictly on opposite sides of line (ab).
///
/// Equivalent to comparing the signs of y - D_ab(x) at both points, where
/// D_ab is the line through a and b, with the vertical-line branch folded in:
/// both reduce to the sign of the product of two cross products. Points on
/// the line count as being on the same side.
inline bool same_half_space(Point2 c, Point2 p, Point2 a, Point2 b, const EpsilonPolicy& eps) {
  if (distance(a, b) <= eps.geometry) {
    throw GeometryError(ErrorKind::DegenerateLine, "line through coincident points");
  }
  const Point2 ab = b - a;
  const double sc = cross(ab, c - a);
  const double sp = cross(ab, p - a);
  return sc * sp >= 0.0;
}

/// Up to two points, in order along a segment.
class ContactList {
 public:
  constexpr ContactList() = default;

  constexpr void push_back(Point2 p) { pts_[count_++] = p; }
  constexpr std::size_t size() const { return count_; }
  constexpr bool empty() const { return count_ == 0; }
  constexpr const Point2& operator[](std::size_t i) const { return pts_[i]; }
  constexpr const Point2* begin() const { return pts_.data(); }
  constexpr const Point2* end() const { return pts_.data() + count_; }

  constexpr ContactList reversed() const {
    ContactList r;
    for (std::size_t i = count_; i > 0; --i) r.push_back(pts_[i - 1]);
    return r;
  }

 private:
  std::array<Point2, 2> pts_{};
  std::size_t count_ = 0;
};

enum class CircleSide { inside, on, outside };

inline CircleSide classify_against_circle(double dist, double radius, const EpsilonPolicy& eps) {
  if (std::abs(dist - radius) <= eps.on_circle) return CircleSide::on;
  return dist < radius ? CircleSide::inside : CircleSide::outside;
}

inline Point2 snap_to_circle(Point2 p, const Circle& k) {
  const Point2 v = p - k.center;
  const double n = norm(v);
  if (n == 0.0) return p;
  return k.center + (k.radius / n) * v;
}

/// Intersections of the closed segment with the circle, ordered by distance
/// from `s.a`.
///
/// Endpoints within `eps.on_circle` of the circle are reported as contacts
/// themselves, a side passing within `eps.on_circle` of tangency yields a
/// single contact, and every reported point is snapped radially onto the
/// circle.
inline ContactList segment_circle_intersections(const Segment& s, const Circle& k,
                                                const EpsilonPolicy& eps) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (std::sqrt(len2) <= eps.geometry) {
    throw GeometryError(ErrorKind::DegenerateSegment, "segment endpoints coincide");
  }
  const double r = k.radius;
  const CircleSide side_a = classify_against_circle(distance(k.center, s.a), r, eps);
  const CircleSide side_b = classify_against_circle(distance(k.center, s.b), r, eps);

  // |a + t d - center|^2 - r^2 = qa t^2 + qb t + qc
  const Point2 f = s.a - k.center;
  const double qa = len2;
  const double qb = 2.0 * dot(f, d);
  const double qc = dot(f, f) - r * r;
  const double raw_disc = qb * qb - 4.0 * qa * qc;
  const double disc = std::max(raw_disc, 0.0);
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (qb + std::copysign(sq, qb));
  double t_lo = q / qa;
  double t_hi = (q != 0.0) ? qc / q : t_lo;
  if (t_lo > t_hi) std::swap(t_lo, t_hi);

  const auto at = [&](double t) { return snap_to_circle(s.a + std::clamp(t, 0.0, 1.0) * d, k); };
  const double len = std::sqrt(len2);
  const double t_tol = eps.geometry / len;

  ContactList out;
  using CS = CircleSide;
  if (side_a == CS::on && side_b == CS::on) {
    out.push_back(snap_to_circle(s.a, k));
    out.push_back(snap_to_circle(s.b, k));
  } else if (side_a == CS::on && side_b == CS::inside) {
    out.push_back(snap_to_circle(s.a, k));
  } else if (side_a == CS::inside && side_b == CS::on) {
    out.push_back(snap_to_circle(s.b, k));
  } else if (side_a == CS::inside && side_b == CS::inside) {
    // convexity of the disk: nothing to report
  } else if (side_a == CS::inside && side_b == CS::outside) {
    out.push_back(at(t_hi));
  } else if (side_a == CS::outside && side_b == CS::inside) {
    out.push_back(at(t_lo));
  } else if (side_a == CS::on && side_b == CS::outside) {
    out.push_back(snap_to_circle(s.a, k));
    const double other = std::abs(t_lo) > std::abs(t_hi) ? t_lo : t_hi;
    if (raw_disc > 0.0 && other > t_tol && other <= 1.0 + t_tol) {
      const Point2 p = at(other);
      if (distance(p, out[0]) > eps.geometry) out.push_back(p);
    }
  } else if (side_a == CS::outside && side_b == CS::on) {
    const Point2 pb = snap_to_circle(s.b, k);
    const double other = std::abs(t_lo - 1.0) > std::abs(t_hi - 1.0) ? t_lo : t_hi;
    if (raw_disc > 0.0 && other < 1.0 - t_tol && other >= -t_tol) {
      const Point2 p = at(other);
      if (distance(p, pb) > eps.geometry) out.push_back(p);
    }
    out.push_back(pb);
  } else {
    // Both endpoints strictly outside: decide via the closest point of the segment.
    const double t_c = -qb / (2.0 * qa);
    if (t_c < 0.0 || t_c > 1.0) return out;
    const double dist = distance(k.center, s.a + t_c * d);
    if (dist > r + eps.on_circle) return out;
    if (dist >= r - eps.on_circle) {
      out.push_back(at(t_c));
      return out;
    }
    out.push_back(at(t_lo));
    out.push_back(at(t_hi));
  }
  return out;
}

/// Orthonormal in-plane frame used to express points of a 3-D plane in 2-D.
struct PlaneFrame {
  Point3 origin;
  Point3 normal;
  Point3 u;
  Point3 v;

  Point2 to_plane(Point3 q) const {
    const Point3 w = q - origin;
    return {dot(w, u), dot(w, v)};
  }
  Point3 from_plane(Point2 q) const { return origin + q.x * u + q.y * v; }
};

inline PlaneFrame make_plane_frame(Point3 origin, Point3 unit_normal,
                                   const EpsilonPolicy& eps = {}) {
  if (std::abs(norm(unit_normal) - 1.0) > eps.geometry) {
    throw GeometryError(ErrorKind::InvalidNormal, "plane normal must have unit norm");
  }
  // Seed with the coordinate axis least aligned with the normal.
  const double ax = std::abs(unit_normal.x), ay = std::abs(unit_normal.y),
               az = std::abs(unit_normal.z);
  Point3 seed{1, 0, 0};
  if (ay <= ax && ay <= az) {
    seed = {0, 1, 0};
  } else if (az <= ax && az <= ay) {
    seed = {0, 0, 1};
  }
  Point3 u = cross(unit_normal, seed);
  u = (1.0 / norm(u)) * u;
  const Point3 v = cross(unit_normal, u);
  return {origin, unit_normal, u, v};
}

struct PlaneReduction {
  Point2 center;
  double radius = 0.0;
};

/// Reduces a ball B(p, r) meeting a plane to the disk it cuts out of that
/// plane. Empty when the ball misses the plane.
inline std::optional<PlaneReduction> reduce_to_plane(Point3 p, Point3 plane_origin,
                                                     Point3 plane_normal, double r,
                                                     const EpsilonPolicy& eps = {}) {
  if (!(r > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "radius must be positive");
  const PlaneFrame frame = make_plane_frame(plane_origin, plane_normal, eps);
  const double h = std::abs(dot(p - plane_origin, plane_normal));
  if (h > r) return std::nullopt;
  const Point3 projected = p - dot(p - plane_origin, plane_normal) * plane_normal;
  return PlaneReduction{frame.to_plane(projected), std::sqrt(std::max(r * r - h * h, 0.0))};
}

}  // namespace diskarea
