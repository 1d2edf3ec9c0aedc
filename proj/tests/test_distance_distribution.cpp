#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diskarea/distance_distribution.hpp"
#include "diskarea/oracles.hpp"

using namespace diskarea;

namespace {

const Polygon& rect() {
  static const Polygon s({{0, 0}, {1, 0}, {1, 0.8}, {0, 0.8}});
  return s;
}
const Polygon& tri() {
  static const Polygon s({{1, 1}, {10, 1}, {3, 4}});
  return s;
}

double uni(std::mt19937_64& rng) { return detail::uniform01(rng); }

std::vector<DistanceDistribution> all_kinds() {
  return {polygon_distribution(tri(), {5, 0}),
          polygon_distribution(rect(), {0.5, 0.4}),
          disk_distribution({0, 0}, 1, {2.5, 1}),
          disk_distribution({0, 0}, 2, {0.5, -0.3}),
          ball_distribution({0, 0, 0}, 1, {1.5, 1, -0.5}),
          ball_distribution({1, 2, 3}, 1.5, {1.2, 2.1, 2.5}),
          segment_distribution({0, 0}, {2, 0}, {3, 1}),
          segment_distribution({0, 0}, {2, 1}, {-1, -0.5})};
}

}  // namespace

TEST(CdfPolygon, Examples) {
  EXPECT_EQ(cdf_polygon(tri(), {5, 0}, 0), 0.0);
  EXPECT_EQ(cdf_polygon(tri(), {5, 0}, 20), 1.0);
  // Radius 0.4 just touches the long edges, so no lens is cut off yet.
  EXPECT_NEAR(cdf_polygon(rect(), {0.5, 0.4}, 0.4), kPi * 0.16 / 0.8, 1e-14);
  const double d = 0.45;
  const OracleReport o = grid_oracle(rect(), {0.5, 0.4}, d, 4000);
  EXPECT_LE(std::abs(cdf_polygon(rect(), {0.5, 0.4}, d) * 0.8 - o.estimate), o.accuracy_bound);
}

TEST(RectangleReference, ClosedFormPieces) {
  EXPECT_EQ(rectangle_center_reference(1, 0.8, -0.1), 0.0);
  EXPECT_NEAR(rectangle_center_reference(1, 0.8, 0.3), 2 * kPi * 0.3 / 0.8, 1e-14);
  EXPECT_EQ(rectangle_center_reference(1, 0.8, 0.7), 0.0);
  EXPECT_NEAR(rectangle_center_cdf(1, 0.8, 0.3), kPi * 0.09 / 0.8, 1e-15);
  EXPECT_EQ(rectangle_center_cdf(1, 0.8, 0.7), 1.0);
}

TEST(RectangleReference, CdfAgreesWithGridOracle) {
  for (double x = 0.02; x < 0.66; x += 0.02) {
    const OracleReport o = grid_oracle(rect(), {0.5, 0.4}, x, 4000);
    EXPECT_LE(std::abs(rectangle_center_cdf(1, 0.8, x) * 0.8 - o.estimate), o.accuracy_bound) << x;
  }
}

TEST(RectangleReference, DensityIsDerivativeOfCdf) {
  for (double x = 0.01; x < 0.64; x += 0.005) {
    const double h = 1e-6;
    // The derivative has kinks where the disk reaches the edges.
    if (std::abs(x - 0.4) < 1e-4 || std::abs(x - 0.5) < 1e-4) continue;
    const double fd = (rectangle_center_cdf(1, 0.8, x + h) - rectangle_center_cdf(1, 0.8, x - h)) / (2 * h);
    EXPECT_NEAR(rectangle_center_reference(1, 0.8, x), fd, 1e-5) << x;
  }
}

TEST(DensityPolygon, Grid) {
  const DensityGrid g = density_polygon(rect(), {0.5, 0.4}, 10000);
  ASSERT_EQ(g.size(), 10000u);
  const double dx = (g.dmax - g.dmin) / 10001;
  double err = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(g.points[i], g.dmin + (i + 1) * dx, 1e-15);
    err = std::max(err, std::abs(g.values[i] - rectangle_center_reference(1, 0.8, g.points[i])));
  }
  EXPECT_LE(err, 0.03);
  EXPECT_GE(g.elapsed_s, 0.0);
  EXPECT_DOUBLE_EQ(density_polygon(tri(), {5, 0}, 10).dmin, 1.0);
  EXPECT_THROW(density_polygon(tri(), {5, 0}, 1), GeometryError);
}

TEST(DensityPolygon, ThreadCountDoesNotChangeValues) {
  const DensityGrid one = density_polygon(tri(), {4, 2}, 500, 1);
  const DensityGrid four = density_polygon(tri(), {4, 2}, 500, 4);
  EXPECT_EQ(four.threads, 4u);
  EXPECT_EQ(one.values, four.values);
}

TEST(DiskSource, Examples) {
  EXPECT_NEAR(cdf_disk_source({1, 1}, 2, {1, 1}, 1.5), 1.5 * 1.5 / 4, 1e-15);
  EXPECT_EQ(cdf_disk_source({0, 0}, 1, {3, 0}, 4), 1.0);
  EXPECT_EQ(cdf_disk_source({0, 0}, 1, {3, 0}, 1.5), 0.0);
  std::mt19937_64 rng(41);
  const Point2 c{0.3, -0.2}, p{1.4, 0.5};
  const double rho = 1.2;
  for (const double d : {0.5, 1.0, 1.7, 2.2}) {
    const std::size_t n = 200000;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = rho * std::sqrt(uni(rng)), t = 2 * kPi * uni(rng);
      hits += distance(c + Point2{r * std::cos(t), r * std::sin(t)}, p) <= d;
    }
    const double f = cdf_disk_source(c, rho, p, d);
    EXPECT_LE(std::abs(double(hits) / n - f), 4 * std::sqrt(f * (1 - f) / n)) << d;
  }
}

TEST(BallSource, Examples) {
  EXPECT_NEAR(cdf_ball_source({0, 0, 0}, 2, {0, 0, 0}, 1), 1.0 / 8, 1e-15);
  EXPECT_EQ(cdf_ball_source({0, 0, 0}, 1, {5, 0, 0}, 3), 0.0);
  std::mt19937_64 rng(42);
  const Point3 c{0, 0, 0}, p{0.8, 0.6, -0.4};
  for (const double d : {0.4, 1.0, 1.6}) {
    const std::size_t n = 200000;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Point3 q;
      do {
        q = {2 * uni(rng) - 1, 2 * uni(rng) - 1, 2 * uni(rng) - 1};
      } while (dot(q, q) > 1);
      hits += distance(q, p) <= d;
    }
    const double f = cdf_ball_source(c, 1, p, d);
    EXPECT_LE(std::abs(double(hits) / n - f), 4 * std::sqrt(f * (1 - f) / n)) << d;
  }
}

TEST(SegmentSource, Examples) {
  EXPECT_EQ(cdf_segment_source({0, 0}, {2, 0}, {1, 0}, 1), 1.0);
  EXPECT_EQ(cdf_segment_source({0, 0}, {2, 0}, {1, 1}, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(cdf_segment_source({0, 0}, {2, 0}, {0, 0}, 1), 0.5);
  EXPECT_THROW(cdf_segment_source({1, 1}, {1, 1}, {0, 0}, 1), GeometryError);
}

TEST(DensityOf, Delegation) {
  const DensityGrid direct = density_polygon(tri(), {4, 2}, 300);
  const DensityGrid via = density_of(polygon_distribution(tri(), {4, 2}), 300);
  EXPECT_EQ(direct.values, via.values);
  const DensityGrid disk = density_of(disk_distribution({0, 0}, 2, {0, 0}), 400);
  // Central differences of the quadratic CDF are exact.
  for (std::size_t i = 0; i < disk.size(); ++i) EXPECT_NEAR(disk.values[i], disk.points[i] / 2, 1e-9);
}

TEST(Distributions, CdfMonotoneWithEndpointValues) {
  for (const DistanceDistribution& d : all_kinds()) {
    double prev = -1;
    for (int i = 0; i <= 10000; ++i) {
      const double x = d.dmin - 0.01 + (d.dmax - d.dmin + 0.02) * i / 10000.0;
      const double f = d(x);
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0);
      if (prev >= 0) {
        EXPECT_GE(f, prev - 1e-12) << to_string(d.kind) << " x=" << x;
      }
      prev = f;
    }
    if (d.dmin > 0) {
      EXPECT_LE(d(d.dmin), 1e-12) << to_string(d.kind);
    }
    EXPECT_GE(d(d.dmax), 1 - 1e-9) << to_string(d.kind);
  }
}

TEST(Distributions, DensityGridsIntegrateToOne) {
  for (const DistanceDistribution& d : all_kinds()) {
    for (const std::size_t np : {2, 10, 100, 1000, 10000}) {
      const DensityGrid g = density_of(d, np);
      for (const double v : g.values) EXPECT_GE(v, 0.0);
      EXPECT_NEAR(integrate(g), 1.0, 2.0 / np + 1e-3) << to_string(d.kind) << " np=" << np;
    }
  }
}

// With the perpendicular foot inside the segment the density has an
// integrable x^(-1/2) singularity at dmin; the grid misses mass of order
// sqrt(spacing) there, so its integral converges more slowly.
TEST(Distributions, SingularSegmentDensityConverges) {
  const DistanceDistribution d = segment_distribution({0, 0}, {2, 0}, {0.7, 1});
  double prev = 1;
  for (const std::size_t np : {100, 1000, 10000, 100000}) {
    const double err = std::abs(integrate(density_of(d, np)) - 1);
    EXPECT_LT(err, prev);
    EXPECT_LE(err, 2.0 / std::sqrt(static_cast<double>(np)));
    prev = err;
  }
}

TEST(Distributions, ScalingEquivariance) {
  const double lambda = 2;
  const Polygon big({{2, 2}, {20, 2}, {6, 8}});
  const DensityGrid g1 = density_polygon(tri(), {5, 0}, 200);
  const DensityGrid g2 = density_polygon(big, {10, 0}, 200);
  EXPECT_NEAR(g2.dmin, lambda * g1.dmin, 1e-12);
  EXPECT_NEAR(g2.dmax, lambda * g1.dmax, 1e-12);
  for (std::size_t i = 0; i < g1.size(); ++i) {
    EXPECT_NEAR(g2.points[i], lambda * g1.points[i], 1e-12);
    EXPECT_NEAR(g2.values[i], g1.values[i] / lambda, 1e-9);
  }
  const DensityGrid s1 = density_of(segment_distribution({0, 0}, {2, 1}, {3, 2}), 200);
  const DensityGrid s2 = density_of(segment_distribution({0, 0}, {4, 2}, {6, 4}), 200);
  for (std::size_t i = 0; i < s1.size(); ++i) EXPECT_NEAR(s2.values[i], s1.values[i] / lambda, 1e-9);
}
