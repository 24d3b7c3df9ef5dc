#include <gtest/gtest.h>

#include "corpus.hpp"
#include "drawing_audit.hpp"
#include "errors.hpp"
#include "lombardi/circular_layout.hpp"
#include "lombardi/decompose.hpp"
#include "lombardi/document.hpp"
#include "lombardi/verify.hpp"

using namespace lombardi;

namespace {

constexpr double kAngleTol = 1e-9;
constexpr double kOnCircleTol = 1e-12;

struct Drawn {
  RotationGraph graph;
  DecompositionPlan plan;
  Drawing drawing;
};

Drawn draw(const std::string& name, std::uint64_t seed = 0) {
  Drawn out{corpus::graph(name), {}, {}};
  out.plan = circular_plan(out.graph);
  CircularOptions opts;
  opts.seed = seed;
  out.drawing = draw_circular(out.graph, out.plan, opts);
  return out;
}

}  // namespace

class CircularCorpus : public ::testing::TestWithParam<const char*> {};

TEST_P(CircularCorpus, PerfectResolutionOnOneCircle) {
  const Drawn r = draw(GetParam());
  const Drawing& d = r.drawing;
  ASSERT_TRUE(d.host);
  EXPECT_EQ(d.edge_count(), r.graph.edge_count());
  EXPECT_LT(audit::max_resolution_defect(d), kAngleTol);
  EXPECT_LT(audit::max_cocircularity_defect(d, *d.host), kOnCircleTol);
  const VerificationReport v = verify_drawing(d);
  EXPECT_TRUE(v.clean(kAngleTol)) << v.max_deviation;
  EXPECT_LT(frame_mismatch(d), kAngleTol);
}

TEST_P(CircularCorpus, EdgesOfOneFactorShareTheirAngleToTheCircle) {
  const Drawn r = draw(GetParam());
  const Circle host = *r.drawing.host;
  for (int f = 0; f < static_cast<int>(r.plan.factors.size()); ++f) {
    std::vector<double> angles;
    for (const DrawnEdge& e : r.drawing.edges) {
      if (e.factor != f) continue;
      const auto [at_p, at_q] = angles_to_circle(e.arc, host);
      EXPECT_NEAR(at_p, at_q, 1e-9);
      angles.push_back(at_p);
    }
    ASSERT_FALSE(angles.empty());
    // a factor is either one angle or, for mirrored slots, an angle and its supplement
    for (double a : angles) {
      EXPECT_TRUE(std::abs(a - angles[0]) < 1e-9 || std::abs(a + angles[0] - kPi) < 1e-9) << a << ' ' << angles[0];
    }
  }
}

TEST_P(CircularCorpus, SameSeedSameBytes) {
  EXPECT_EQ(drawing_to_json(draw(GetParam(), 5).drawing), drawing_to_json(draw(GetParam(), 5).drawing));
}

INSTANTIATE_TEST_SUITE_P(Corpus, CircularCorpus,
                         ::testing::Values("wagner", "k44", "paley13", "petersen", "nauru", "k5", "k33", "k4", "cube",
                                           "nested2"),
                         [](const auto& info) { return std::string(info.param); });

TEST(CircularLayout, SlotsForEachCase) {
  const SlotAssignment four = assign_slots(4, circular_plan(corpus::graph("k44")));
  EXPECT_EQ(four.degree, 4);
  EXPECT_EQ(four.factors.size(), 2u);
  const SlotAssignment three = assign_slots(3, circular_plan(corpus::graph("wagner")));
  EXPECT_EQ(three.factors.size(), 2u);
  EXPECT_EQ(error_code_of([] { assign_slots(5, circular_plan(corpus::graph("k44"))); }), ErrorCode::InfeasibleCase);
}

TEST(CircularLayout, CutVertexGraphIsRejected) {
  EXPECT_EQ(error_code_of([] { circular_plan(corpus::graph("no-pm-cubic")); }), ErrorCode::NoPerfectMatching);
}
