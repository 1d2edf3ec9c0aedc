#include <gtest/gtest.h>

#include <sstream>

#include "diskarea/io.hpp"

using namespace diskarea;

TEST(PolygonCsv, RoundTrip) {
  const Polygon s = generate_star_polygon(7, 1000, 3);
  std::stringstream buf;
  write_polygon_csv(buf, s);
  const Polygon back = read_polygon_csv(buf);
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(back[i], s[i]);
}

TEST(PolygonCsv, AcceptsCommentsAndBlankLines) {
  std::istringstream in("# triangle\n1,1\n10, 1\n\n3,4\n1,1\n");
  const Polygon s = read_polygon_csv(in);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(polygon_area(s), 13.5);
}

TEST(PolygonCsv, Rejections) {
  const auto kind = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_polygon_csv(in);
    } catch (const GeometryError& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind("0,0\n1,0\n0,1\n"), ErrorKind::ParseError);          // not closed
  EXPECT_EQ(kind("0,0\n1,x\n0,1\n0,0\n"), ErrorKind::ParseError);     // bad number
  EXPECT_EQ(kind("0,0,0\n1,0\n0,1\n0,0\n"), ErrorKind::ParseError);   // three fields
  EXPECT_EQ(kind("0,0\n1,1\n1,0\n0,1\n0,0\n"), ErrorKind::NotSimple);
  EXPECT_EQ(kind("0,0\n1,0\n0,0\n"), ErrorKind::TooFewVertices);
}

TEST(DensityCsv, Layout) {
  DensityGrid g;
  g.points = {0.25, 0.5};
  g.values = {1.0, 0.1};
  g.dmin = 0;
  g.dmax = 0.75;
  g.elapsed_s = 0.5;
  std::ostringstream out;
  write_density_csv(out, g);
  EXPECT_EQ(out.str(), "x,density\n0.25,1\n0.5,0.10000000000000001\n# dmin=0\n# dmax=0.75\n# elapsed_s=0.5\n# threads=1\n");
}

TEST(TriangleFixtureCsv, RoundTrip) {
  TriangleFixture fx{26, "26/oeo", {{0.1, 0.2}, {3, -1}, {-2, 2.5}}, {{0.3, 0.1}, 1.7}, 2.0 / 3};
  std::stringstream buf;
  buf << "code,branch,ax,ay,bx,by,cx,cy,px,py,r,area\n";
  write_triangle_fixture(buf, fx);
  const auto back = read_triangle_fixtures(buf);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].branch, "26/oeo");
  EXPECT_EQ(back[0].area, fx.area);
  EXPECT_EQ(back[0].triangle.c, fx.triangle.c);
}
