// Density of the distance from the centre of a 1 x 0.8 rectangle, printed
// next to its closed form.

#include <cstdio>

#include "diskarea/diskarea.hpp"

int main() {
  using namespace diskarea;
  const Polygon rect({{0, 0}, {1, 0}, {1, 0.8}, {0, 0.8}});
  const DensityGrid g = density_polygon(rect, {0.5, 0.4}, 20);
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::printf("%.4f %.6f %.6f\n", g.points[i], g.values[i],
                rectangle_center_reference(1.0, 0.8, g.points[i]));
  }
  std::printf("dmin=%g dmax=%g elapsed_s=%g\n", g.dmin, g.dmax, g.elapsed_s);
}
