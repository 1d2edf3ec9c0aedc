#pragma once

// Areas of the two regions a chord cuts out of a disk.

#include <algorithm>
#include <cmath>

#include "diskarea/geom_core.hpp"

namespace diskarea {

struct Lens {
  Circle circle;
  Point2 chord_a;
  Point2 chord_b;
};

namespace detail {

inline Lens validated(const Lens& lens, const EpsilonPolicy& eps) {
  const Circle& k = lens.circle;
  if (!(k.radius > 0.0) || !std::isfinite(k.radius)) {
    throw GeometryError(ErrorKind::InvalidArgument, "lens circle needs a positive radius");
  }
  for (const Point2 p : {lens.chord_a, lens.chord_b}) {
    if (std::abs(distance(k.center, p) - k.radius) > eps.on_circle) {
      throw GeometryError(ErrorKind::ChordEndpointsOffCircle, "chord endpoint is not on the circle");
    }
  }
  if (distance(lens.chord_a, lens.chord_b) <= eps.geometry) {
    throw GeometryError(ErrorKind::CoincidentChordEndpoints, "chord endpoints coincide");
  }
  return {k, snap_to_circle(lens.chord_a, k), snap_to_circle(lens.chord_b, k)};
}

// R^2 arccos(c) - R^2 c sqrt(1 - c^2), c the cosine of the half-angle subtended by the chord.
inline double minor_lens_formula(double radius, double c_theta) {
  const double c = std::clamp(c_theta, -1.0, 1.0);
  const double r2 = radius * radius;
  return r2 * std::acos(c) - r2 * c * std::sqrt(std::max(0.0, 1.0 - c * c));
}

}  // namespace detail

/// Area of the smaller region bounded by the chord and the circle.
inline double minor_lens_area(const Lens& lens, const EpsilonPolicy& eps = {}) {
  const Lens l = detail::validated(lens, eps);
  const Point2 p = l.circle.center;
  const double r = l.circle.radius;
  const Point2 mid = 0.5 * (l.chord_a + l.chord_b);
  const Point2 pc = mid - p;
  const double pc_len = norm(pc);
  if (pc_len <= eps.geometry) return 0.5 * kPi * r * r;
  const double c_theta = dot(pc, l.chord_b - p) / (r * pc_len);
  return detail::minor_lens_formula(r, c_theta);
}

/// Area of the larger region; complement of minor_lens_area in the disk.
inline double major_lens_area(const Lens& lens, const EpsilonPolicy& eps = {}) {
  const double r = lens.circle.radius;
  return kPi * r * r - minor_lens_area(lens, eps);
}

}  // namespace diskarea
