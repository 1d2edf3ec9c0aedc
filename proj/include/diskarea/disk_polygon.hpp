#pragma once

// Area of disk ∩ polygon: sum of disk ∩ triangle over a triangulation.

#include <algorithm>
#include <cstddef>

#include "diskarea/disk_triangle.hpp"
#include "diskarea/geom_core.hpp"
#include "diskarea/polygon.hpp"

namespace diskarea {

struct DiskPolygonResult {
  double area = 0.0;
  std::size_t perturbed = 0;  // triangles resolved by nudging the radius
  std::size_t oracle = 0;     // triangles that fell back to grid quadrature
};

/// `tri` must triangulate `s`; it is taken separately so a CDF sweep can reuse it.
inline DiskPolygonResult disk_polygon_intersection(const Polygon& s, Point2 p, double d,
                                                   const Triangulation& tri,
                                                   const EpsilonPolicy& eps) {
  DiskPolygonResult out;
  if (!(d > 0.0)) return out;
  const Circle k{p, d};
  for (const Triangle& t : tri.triangles) {
    const DiskTriangleResult r = disk_triangle_intersection(t, k, eps);
    out.area += r.area;
    if (r.resolution == Resolution::perturbed) ++out.perturbed;
    if (r.resolution == Resolution::oracle) ++out.oracle;
  }
  // Rounding in the per-triangle sums must not leave the feasible range.
  out.area = std::clamp(out.area, 0.0, std::min(polygon_area(s), kPi * d * d));
  return out;
}

inline double disk_polygon_area(const Polygon& s, Point2 p, double d, const Triangulation& tri,
                                const EpsilonPolicy& eps) {
  return disk_polygon_intersection(s, p, d, tri, eps).area;
}

inline double disk_polygon_area(const Polygon& s, Point2 p, double d) {
  return disk_polygon_area(s, p, d, triangulate(s), EpsilonPolicy::for_scale(d));
}

}  // namespace diskarea
