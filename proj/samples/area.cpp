// Area of a disk ∩ polygon, with an independent grid estimate alongside.

#include <cstdio>

#include "diskarea/diskarea.hpp"

int main() {
  using namespace diskarea;
  const Polygon s({{1, 1}, {10, 1}, {3, 4}});
  const Point2 p{5, 0};
  for (const double d : {1.5, 3.0, 6.0}) {
    const double exact = disk_polygon_area(s, p, d);
    const OracleReport grid = grid_oracle(s, p, d, 2000);
    std::printf("d=%g area=%.12f grid=%.6f +- %.2g\n", d, exact, grid.estimate, grid.accuracy_bound);
  }
}
