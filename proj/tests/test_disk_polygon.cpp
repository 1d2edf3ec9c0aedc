#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diskarea/disk_polygon.hpp"
#include "diskarea/oracles.hpp"
#include "support/exact_oracle.hpp"

using namespace diskarea;

namespace {

double uni(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * detail::uniform01(rng); }

std::vector<Point2> ring(const Polygon& s) { return {s.vertices().begin(), s.vertices().end()}; }

}  // namespace

TEST(DiskPolygon, Examples) {
  const Polygon rect({{0, 0}, {1, 0}, {1, 0.8}, {0, 0.8}});
  EXPECT_NEAR(disk_polygon_area(rect, {0.5, 0.4}, 0.3), kPi * 0.09, 1e-15);
  const BoundaryDistances bd = boundary_distances({0.5, 0.4}, rect);
  EXPECT_DOUBLE_EQ(disk_polygon_area(rect, {0.5, 0.4}, bd.dmax), 0.8);
  EXPECT_DOUBLE_EQ(disk_polygon_area(rect, {0.5, 0.4}, 5.0), 0.8);
  EXPECT_EQ(disk_polygon_area(rect, {3, 3}, 1.0), 0.0);
}

TEST(DiskPolygon, MatchesFanOracleOnStarPolygons) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Polygon s = generate_star_polygon(1 + rng() % 50, 1000, rng());
    const Point2 c{uni(rng, -100, 100), uni(rng, -100, 100)};
    const double r = uni(rng, 50, 250);
    const double a = disk_polygon_area(s, c, r);
    EXPECT_NEAR(a, testsupport::exact_disk_polygon_area(ring(s), c, r), 1e-9 * kPi * r * r);
  }
}

TEST(DiskPolygon, WithinGridOracleBound) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 500; ++i) {
    const Polygon s = generate_star_polygon(1 + rng() % 50, 1000, rng());
    const Point2 c{uni(rng, -100, 100), uni(rng, -100, 100)};
    const double r = uni(rng, 50, 250);
    const OracleReport o = grid_oracle(s, c, r, 1000);
    EXPECT_LE(std::abs(disk_polygon_area(s, c, r) - o.estimate), o.accuracy_bound);
  }
}

TEST(DiskPolygon, MonotoneInRadius) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 30; ++i) {
    const Polygon s = generate_star_polygon(1 + rng() % 20, 1000, rng());
    const Triangulation tri = triangulate(s);
    const Point2 c{uni(rng, -300, 300), uni(rng, -300, 300)};
    double prev = 0;
    for (int j = 1; j <= 20; ++j) {
      const double a = disk_polygon_area(s, c, 60.0 * j, tri, EpsilonPolicy::for_scale(60.0 * j));
      EXPECT_GE(a, prev * (1 - 1e-12));
      prev = a;
    }
  }
}

TEST(DiskPolygon, OrientationStartIndexAndRigidMotion) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    const Polygon s = generate_star_polygon(1 + rng() % 30, 1000, rng());
    const Point2 c{uni(rng, -100, 100), uni(rng, -100, 100)};
    const double r = uni(rng, 50, 250);
    const double a = disk_polygon_area(s, c, r);

    std::vector<Point2> rev = ring(s);
    std::reverse(rev.begin(), rev.end());
    EXPECT_NEAR(disk_polygon_area(Polygon(rev), c, r), a, 1e-9 * std::max(a, 1.0));

    std::vector<Point2> rot = ring(s);
    std::rotate(rot.begin(), rot.begin() + 1 + rng() % (rot.size() - 1), rot.end());
    EXPECT_NEAR(disk_polygon_area(Polygon(rot), c, r), a, 1e-9 * std::max(a, 1.0));

    const double th = uni(rng, 0, 2 * kPi);
    const Point2 shift{uni(rng, -500, 500), uni(rng, -500, 500)};
    const auto move = [&](Point2 p) {
      return Point2{std::cos(th) * p.x - std::sin(th) * p.y, std::sin(th) * p.x + std::cos(th) * p.y} + shift;
    };
    std::vector<Point2> moved;
    for (const Point2& p : s.vertices()) moved.push_back(move(p));
    EXPECT_NEAR(disk_polygon_area(Polygon(moved), move(c), r), a, 1e-9 * std::max(a, 1.0));
  }
}

TEST(GridOracle, Examples) {
  const Polygon huge({{-10, -10}, {10, -10}, {10, 10}, {-10, 10}});
  const OracleReport in = grid_oracle(huge, {0, 0}, 1, 2000);
  EXPECT_LE(std::abs(in.estimate - kPi), in.accuracy_bound);
  EXPECT_EQ(in.method, OracleMethod::grid);
  EXPECT_EQ(in.effort, 2000u * 2000u);
  EXPECT_EQ(grid_oracle(huge, {30, 0}, 1, 200).estimate, 0.0);
  const Polygon tri({{1, 1}, {10, 1}, {3, 4}});
  const OracleReport coarse = grid_oracle(tri, {4, 2}, 2, 300), fine = grid_oracle(tri, {4, 2}, 2, 600);
  EXPECT_LE(fine.accuracy_bound, coarse.accuracy_bound / 2);
  EXPECT_THROW(grid_oracle(tri, {4, 2}, 2, 50), GeometryError);
}

TEST(MonteCarloOracle, Examples) {
  const Polygon huge({{-10, -10}, {10, -10}, {10, 10}, {-10, 10}});
  EXPECT_EQ(monte_carlo_oracle(huge, {0, 0}, 1, 10000, 1).estimate, kPi);
  EXPECT_EQ(monte_carlo_oracle(huge, {30, 0}, 1, 10000, 1).estimate, 0.0);
  const Polygon half({{-10, -10}, {10, -10}, {10, 0}, {-10, 0}});
  const OracleReport h = monte_carlo_oracle(half, {0, 0}, 1, 100000, 7);
  EXPECT_LE(std::abs(h.estimate - kPi / 2), h.accuracy_bound);
  EXPECT_GT(h.accuracy_bound, 0.0);
  EXPECT_EQ(h.estimate, monte_carlo_oracle(half, {0, 0}, 1, 100000, 7).estimate);
  EXPECT_THROW(monte_carlo_oracle(half, {0, 0}, 1, 100, 7), GeometryError);
}
