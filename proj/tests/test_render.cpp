#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace tltest;

namespace {

const double kH = std::sqrt(3.0) / 2;

std::vector<TropVector> r_columns(std::size_t k) {
  std::vector<TropVector> out;
  TropMatrix a = parse_matrix("maxplus 3 3\n1 -inf -inf\n5 2 -inf\n-inf 6 3\n");
  TropVector x{0, NI(), NI()};
  for (std::size_t i = 0; i < k; ++i, x = mv(a, x)) out.push_back(x);
  return out;
}

}  // namespace

TEST(Render, ExponentialProjection) {
  Point2 c = project_exponential({0, 0, 0}, 1.0);
  EXPECT_NEAR(c.x, 0.5, 1e-12);
  EXPECT_NEAR(c.y, kH / 3, 1e-12);
  Point2 v = project_exponential({0, NI(), NI()}, 2.0);
  EXPECT_NEAR(v.x, 0.0, 1e-12);
  EXPECT_NEAR(v.y, 0.0, 1e-12);
  Point2 e = project_exponential({1, 5, NI()}, 1.0);
  EXPECT_NEAR(e.x, 1.0 / (1.0 + std::exp(-4.0)), 1e-12);
  EXPECT_NEAR(e.y, 0.0, 1e-12);
  Point2 top = project_exponential({NI(), NI(), 7}, 1.0);
  EXPECT_NEAR(top.x, 0.5, 1e-12);
  EXPECT_NEAR(top.y, kH, 1e-12);
  EXPECT_THROW(project_exponential({NI(), NI(), NI()}, 1.0), Error);
  EXPECT_THROW(project_exponential({0, PI(), 0}, 1.0), Error);
  EXPECT_THROW(project_exponential({0, 0, 0}, 0.0), Error);
  EXPECT_THROW(project_exponential({0, 0}, 1.0), DimensionError);
}

TEST(Render, OrthogonalProjection) {
  Point2 o = project_orthogonal({4, 4, 4});
  EXPECT_NEAR(o.x, 0.0, 1e-12);
  EXPECT_NEAR(o.y, 0.0, 1e-12);
  Point2 p = project_orthogonal({1, 0, 0});
  EXPECT_NEAR(p.x, 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p.y, 1.0 / std::sqrt(6.0), 1e-12);
  EXPECT_THROW(project_orthogonal({0, NI(), 0}), Error);
}

TEST(Render, OrthogonalOrbitIsCollinear) {
  auto cols = r_columns(12);
  std::vector<Point2> pts;
  for (const auto& x : cols)
    if (std::all_of(x.begin(), x.end(), [](const ExtInt& v) { return v.is_finite(); }))
      pts.push_back(project_orthogonal(x));
  ASSERT_EQ(pts.size(), 10u);
  for (std::size_t i = 2; i < pts.size(); ++i) {
    double cross = (pts[1].x - pts[0].x) * (pts[i].y - pts[0].y) - (pts[1].y - pts[0].y) * (pts[i].x - pts[0].x);
    EXPECT_NEAR(cross, 0.0, 1e-9);
  }
}

TEST(RenderProperty, ProjectionsIgnoreScalarShift) {
  Rng rng(701);
  for (int t = 0; t < 10000; ++t) {
    TropVector x = rng.vec(3, -20, 20, 0.2);
    if (std::all_of(x.begin(), x.end(), [](const ExtInt& v) { return v.is_neg_inf(); })) continue;
    const ExtInt l(rng.uniform(-1000, 1000));
    TropVector y = vscale(l, x);
    const double beta = 0.25 * static_cast<double>(rng.uniform(1, 8));
    Point2 a = project_exponential(x, beta), b = project_exponential(y, beta);
    ASSERT_NEAR(a.x, b.x, 1e-12);
    ASSERT_NEAR(a.y, b.y, 1e-12);
    ASSERT_GE(a.y, -1e-12);
    ASSERT_LE(a.y, kH * (1 - std::abs(2 * a.x - 1)) + 1e-9);
    if (std::all_of(x.begin(), x.end(), [](const ExtInt& v) { return v.is_finite(); })) {
      Point2 c = project_orthogonal(x), d = project_orthogonal(y);
      ASSERT_NEAR(c.x, d.x, 1e-9);
      ASSERT_NEAR(c.y, d.y, 1e-9);
    }
  }
}

TEST(Render, SegmentEndpoints) {
  RenderSpec spec;
  TropVector g{0, 2, 1}, h{3, 0, 0};
  auto seg = plane_segment(g, h, spec);
  ASSERT_EQ(seg.size(), 200u);
  Point2 ph = project_exponential(h, 1.0), pg = project_exponential(g, 1.0);
  EXPECT_NEAR(seg.front().x, ph.x, 1e-9);
  EXPECT_NEAR(seg.front().y, ph.y, 1e-9);
  EXPECT_NEAR(seg.back().x, pg.x, 1e-9);
  EXPECT_NEAR(seg.back().y, pg.y, 1e-9);
}

TEST(Render, SceneSkipsUnprojectable) {
  RenderSpec spec;
  spec.mode = RenderMode::Orthogonal;
  Scene sc = make_scene(r_columns(4), spec);
  EXPECT_EQ(sc.points.size(), 2u);
  EXPECT_EQ(sc.skipped, 2u);
  spec.mode = RenderMode::Plane;
  Scene pl = make_scene(r_columns(4), spec, true);
  EXPECT_EQ(pl.points.size(), 3u);
  EXPECT_TRUE(pl.polylines.empty());
  EXPECT_NEAR(pl.points[0].x, 1.0, 0);
  EXPECT_NEAR(pl.points[0].y, 5.0, 0);
}

TEST(Render, SvgIsDeterministicAndMatchesGolden) {
  RenderSpec spec;
  Scene sc = make_scene(r_columns(6), spec, true);
  EXPECT_EQ(sc.points.size(), 6u);
  EXPECT_EQ(sc.polylines.size(), 15u);
  std::string svg = render_svg(sc, spec);
  EXPECT_EQ(svg, render_svg(make_scene(r_columns(6), spec, true), spec));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(svg.find("-0.000000"), std::string::npos);
  std::ifstream in(std::string(TL_GOLDEN_DIR) + "/r6_exp.svg");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(svg, ss.str());
}
