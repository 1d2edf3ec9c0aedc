#pragma once

// Experimental protocols: density error on a rectangle against its closed
// form, and exact disk ∩ star-polygon areas against grid quadrature.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "diskarea/disk_polygon.hpp"
#include "diskarea/distance_distribution.hpp"
#include "diskarea/io.hpp"
#include "diskarea/oracles.hpp"
#include "diskarea/polygon.hpp"

namespace diskarea {

struct RectangleErrorRow {
  std::size_t np = 0;
  double err_max = 0.0;
  double elapsed_s = 0.0;
};

/// Rectangle [0,L] x [0,alpha*L] seen from its centre.
inline std::vector<RectangleErrorRow> run_rectangle_error_study(const std::vector<std::size_t>& np_list,
                                                                double L, double alpha) {
  const Polygon rect({{0.0, 0.0}, {L, 0.0}, {L, alpha * L}, {0.0, alpha * L}},
                     EpsilonPolicy::for_scale(L));
  const Point2 p{L / 2.0, alpha * L / 2.0};
  std::vector<RectangleErrorRow> rows;
  for (const std::size_t np : np_list) {
    if (np < 100) throw GeometryError(ErrorKind::InvalidArgument, "np must be at least 100");
    const DensityGrid g = density_polygon(rect, p, np);
    RectangleErrorRow row{np, 0.0, g.elapsed_s};
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double ref = rectangle_center_reference(L, alpha, g.points[i]);
      row.err_max = std::max(row.err_max, std::abs(g.values[i] - ref));
    }
    rows.push_back(row);
  }
  return rows;
}

struct BenchRecord {
  std::size_t n_vertices = 0;  // 4n
  std::size_t instance = 0;
  std::uint64_t seed = 0;      // reproduces this instance alone
  Point2 center;
  double radius = 0.0;
  double elapsed_s = 0.0;
  double area = 0.0;
  double oracle_area = 0.0;
  double accuracy_bound = 0.0;
  double abs_err = 0.0;
};

struct BenchRow {
  std::size_t n_vertices = 0;
  std::size_t instances = 0;
  double mean_time_s = 0.0;
  double max_time_s = 0.0;
  double err_mean = 0.0;
  double err_max = 0.0;
};

struct BenchSummary {
  std::vector<BenchRow> rows;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  BenchSummary summary;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Seed of instance `instance` of the run with n points per quadrant.
inline std::uint64_t derive_instance_seed(std::uint64_t master, std::size_t n, std::size_t instance) {
  return detail::splitmix64(detail::splitmix64(detail::splitmix64(master) ^ n) ^ instance);
}

struct BenchInstance {
  Polygon polygon;
  Point2 center;
  double radius;
};

/// Star polygon with R0 = 1000, disk centre uniform on [-100,100]^2, radius uniform on [50,250].
inline BenchInstance make_bench_instance(std::size_t n, std::uint64_t instance_seed) {
  std::mt19937_64 rng(instance_seed);
  const std::uint64_t polygon_seed = rng();
  const double cx = -100.0 + 200.0 * detail::uniform01(rng);
  const double cy = -100.0 + 200.0 * detail::uniform01(rng);
  const double r = 50.0 + 200.0 * detail::uniform01(rng);
  return {generate_star_polygon(n, 1000.0, polygon_seed), {cx, cy}, r};
}

inline BenchResult run_random_area_bench(std::size_t m, const std::vector<std::size_t>& n_list,
                                         std::uint64_t seed, std::size_t oracle_cells = 2000) {
  if (m < 1) throw GeometryError(ErrorKind::InvalidArgument, "m must be at least 1");
  BenchResult out;
  for (const std::size_t n : n_list) {
    BenchRow row;
    row.n_vertices = 4 * n;
    for (std::size_t k = 0; k < m; ++k) {
      BenchRecord rec;
      rec.n_vertices = 4 * n;
      rec.instance = k;
      rec.seed = derive_instance_seed(seed, n, k);
      const BenchInstance inst = make_bench_instance(n, rec.seed);
      rec.center = inst.center;
      rec.radius = inst.radius;

      const auto t0 = std::chrono::steady_clock::now();
      const Triangulation tri = triangulate(inst.polygon);
      rec.area = disk_polygon_area(inst.polygon, inst.center, inst.radius, tri,
                                   EpsilonPolicy::for_scale(inst.radius));
      rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

      const OracleReport oracle = grid_oracle(inst.polygon, inst.center, inst.radius, oracle_cells);
      rec.oracle_area = oracle.estimate;
      rec.accuracy_bound = oracle.accuracy_bound;
      rec.abs_err = std::abs(rec.area - rec.oracle_area);

      row.mean_time_s += rec.elapsed_s;
      row.max_time_s = std::max(row.max_time_s, rec.elapsed_s);
      row.err_mean += rec.abs_err;
      row.err_max = std::max(row.err_max, rec.abs_err);
      out.records.push_back(rec);
    }
    row.instances = m;
    row.mean_time_s /= static_cast<double>(m);
    row.err_mean /= static_cast<double>(m);
    out.summary.rows.push_back(row);
  }
  return out;
}

/// Errors are against grid quadrature, not a second exact method.
inline void write_bench_summary_csv(std::ostream& out, const BenchSummary& s) {
  out << "n_vertices,mean_time_s,max_time_s,err_mean,err_max\n";
  for (const BenchRow& r : s.rows) {
    out << r.n_vertices << ',' << format_number(r.mean_time_s) << ',' << format_number(r.max_time_s)
        << ',' << format_number(r.err_mean) << ',' << format_number(r.err_max) << '\n';
  }
}

}  // namespace diskarea
