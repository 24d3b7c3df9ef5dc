#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "drawing_audit.hpp"
#include "errors.hpp"
#include "lombardi/degenerate_layout.hpp"
#include "lombardi/document.hpp"
#include "lombardi/verify.hpp"

using namespace lombardi;

namespace {

constexpr double kAngleTol = 1e-9;

}  // namespace

TEST(TwoDegenerate, RandomGraphsDrawCleanUnlessProvablyBlocked) {
  std::mt19937_64 rng(51);
  int clean = 0, blocked = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    const RotationGraph g = oracle::with_random_rotation(oracle::random_two_degenerate(n, rng), rng);
    DegenerateOptions opts;
    opts.seed = static_cast<std::uint64_t>(i);
    SCOPED_TRACE("graph " + std::to_string(i) + ", n = " + std::to_string(n));
    const auto proof = oracle::smooth_triangle_block(g);
    Drawing d;
    const auto code = error_code_of([&] { d = draw_2degenerate(g, opts); });
    if (proof) {
      EXPECT_EQ(code, ErrorCode::NoClearPoint);
      ++blocked;
      continue;
    }
    ASSERT_FALSE(code) << graph_to_json(g);
    EXPECT_LT(audit::max_resolution_defect(d), kAngleTol);
    EXPECT_TRUE(audit::respects_rotation(d, g));
    const VerificationReport r = verify_drawing(d);
    EXPECT_TRUE(r.clean(kAngleTol)) << r.max_deviation << ' ' << r.incidence.size();
    clean += r.clean(kAngleTol) ? 1 : 0;
  }
  EXPECT_EQ(clean + blocked, 200);
  RecordProperty("clean", clean);
  RecordProperty("blocked", blocked);
}

TEST(TwoDegenerate, SmoothTriangleLeavesNoRoom) {
  // 0, 2, 4 see each other at opposite slots, so the triangle is a full
  // circle; vertex 1's locus from 0 and 2 is that same circle
  RotationGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {2, 3}, {2, 4}, {0, 4}, {3, 5}});
  g.set_rotation(0, {1, 2, 3, 4});
  g.set_rotation(1, {0, 2});
  g.set_rotation(2, {4, 1, 0, 3});
  g.set_rotation(3, {0, 5, 2});
  g.set_rotation(4, {2, 0});
  g.set_rotation(5, {3});
  const auto proof = oracle::smooth_triangle_block(g);
  ASSERT_TRUE(proof);
  EXPECT_EQ(proof->blocked, 1);
  EXPECT_EQ(error_code_of([&] { draw_2degenerate(g); }), ErrorCode::NoClearPoint);
  // swapping 1 and 3 at vertex 2 puts them on the same side: drawable
  g.set_rotation(2, {4, 3, 0, 1});
  EXPECT_FALSE(oracle::smooth_triangle_block(g));
  const Drawing d = draw_2degenerate(g);
  EXPECT_TRUE(verify_drawing(d).clean(kAngleTol));
}

TEST(TwoDegenerate, CorpusGraphs) {
  for (const char* name : {"fan7", "k23"}) {
    SCOPED_TRACE(name);
    const RotationGraph g = corpus::graph(name);
    const Drawing d = draw_2degenerate(g);
    EXPECT_LT(audit::max_resolution_defect(d), kAngleTol);
    EXPECT_TRUE(audit::respects_rotation(d, g));
    EXPECT_TRUE(verify_drawing(d).clean(kAngleTol));
  }
}

TEST(TwoDegenerate, RejectsDenserGraphs) {
  EXPECT_EQ(error_code_of([] { draw_2degenerate(corpus::graph("k4")); }), ErrorCode::NotTwoDegenerate);
  EXPECT_EQ(error_code_of([] { draw_3degenerate(corpus::graph("k5")); }), ErrorCode::NotThreeDegenerate);
}

TEST(TwoDegenerate, SameSeedSameDrawing) {
  const RotationGraph g = corpus::graph("fan7");
  DegenerateOptions opts;
  opts.seed = 9;
  const Drawing a = draw_2degenerate(g, opts), b = draw_2degenerate(g, opts);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(a.positions[v].x, b.positions[v].x);
    EXPECT_EQ(a.positions[v].y, b.positions[v].y);
  }
}

TEST(DegreeTwoPlacement, MeetingPointHasExactAngles) {
  // path a - v - b with v placed last
  RotationGraph g(3, {{0, 2}, {1, 2}});
  PartialState s(g, {});
  s.place(0, {0, 0});
  s.place(1, {2, 0});
  s.set_frame(0, frame_with_slot(Direction(1.0), 0, 1));
  s.set_frame(1, frame_with_slot(Direction(2.0), 0, 1));
  const Point x = place_degree2(s, 2, 0, 1);
  EXPECT_TRUE(s.placed(2));
  const Drawing& d = s.drawing();
  EXPECT_LT(audit::max_resolution_defect(d), kAngleTol);
  EXPECT_NEAR(distance(d.positions[2], x), 0.0, 0.0);
}

TEST(ThreeDegenerate, PlanarPolyhedra) {
  for (const char* name : {"k4", "cube"}) {
    SCOPED_TRACE(name);
    const RotationGraph g = corpus::graph(name);
    const Drawing d = draw_3degenerate(g);
    EXPECT_LT(audit::max_resolution_defect(d), kAngleTol);
    EXPECT_TRUE(audit::respects_rotation(d, g));
    const VerificationReport r = verify_drawing(d);
    EXPECT_TRUE(r.clean(kAngleTol));
    EXPECT_EQ(r.crossing_count, 0);
  }
}

TEST(ThreeDegenerate, SevenVertexSplitGraphFails) {
  EXPECT_EQ(error_code_of([] { draw_3degenerate(corpus::graph("g7")); }), ErrorCode::CoincidentPlacement);
  try {
    draw_3degenerate(corpus::graph("g7"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("vertex"), std::string::npos) << e.what();
  }
}
