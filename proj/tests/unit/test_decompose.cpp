#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "corpus.hpp"
#include "errors.hpp"
#include "lombardi/decompose.hpp"
#include "oracles.hpp"

using namespace lombardi;

namespace {

bool is_matching(const RotationGraph& g, const std::vector<EdgeId>& m) {
  std::vector<int> used(g.vertex_count(), 0);
  for (EdgeId e : m) {
    if (++used[g.edge(e).u] > 1 || ++used[g.edge(e).v] > 1) return false;
  }
  return true;
}

// Every edge exactly once across the parts.
bool partitions_edges(const RotationGraph& g, const std::vector<std::vector<EdgeId>>& parts) {
  std::vector<int> seen(g.edge_count(), 0);
  for (const auto& part : parts) {
    for (EdgeId e : part) ++seen[e];
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

bool all_degrees(const RotationGraph& g, const std::vector<EdgeId>& edges, int want) {
  const auto deg = oracle::degrees_in(g, edges);
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == want; });
}

}  // namespace

TEST(Matching, PerfectMatchingAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(41);
  int with = 0, without = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    const oracle::SimpleGraph s = oracle::random_graph(n, p, rng);
    const RotationGraph g = oracle::to_rotation_graph(s);
    const PerfectMatchingResult r = perfect_matching(g);
    const bool expect = oracle::has_perfect_matching(s);
    EXPECT_EQ(r.matching.has_value(), expect);
    EXPECT_NE(r.matching.has_value(), r.witness.has_value());
    if (r.matching) {
      ++with;
      EXPECT_EQ(static_cast<int>(r.matching->size()), n / 2);
      EXPECT_TRUE(is_matching(g, *r.matching));
    } else {
      ++without;
      EXPECT_TRUE(witness_certifies(g, *r.witness));
      EXPECT_EQ(r.witness->deficiency, n - 2 * static_cast<int>(max_matching(g).size()));
    }
  }
  EXPECT_GT(with, 20);
  EXPECT_GT(without, 20);
}

TEST(Matching, CutVertexCubicGraphHasBarrier) {
  const RotationGraph g = corpus::graph("no-pm-cubic");
  const PerfectMatchingResult r = perfect_matching(g);
  EXPECT_FALSE(r.matching);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(witness_certifies(g, *r.witness));
  EXPECT_EQ(r.witness->barrier.size(), 1u);
  EXPECT_EQ(r.witness->odd_components.size(), 3u);
  // a barrier of the wrong size must not certify
  TutteWitness bogus = *r.witness;
  bogus.barrier.push_back(bogus.barrier[0] == 0 ? 1 : 0);
  EXPECT_FALSE(witness_certifies(g, bogus));
}

TEST(EulerHalving, SplitsEveryDegree) {
  for (const char* name : {"k5", "k44", "nested2"}) {
    SCOPED_TRACE(name);
    const RotationGraph g = corpus::graph(name);
    const auto [a, b] = euler_halving(g);
    EXPECT_TRUE(partitions_edges(g, {a, b}));
    const auto da = oracle::degrees_in(g, a), db = oracle::degrees_in(g, b);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(da[v], g.degree(v) / 2);
      EXPECT_EQ(db[v], g.degree(v) / 2);
    }
  }
  EXPECT_EQ(error_code_of([] { euler_halving(corpus::graph("petersen")); }), ErrorCode::OddDegree);
  // 39 edges cannot split evenly
  EXPECT_EQ(error_code_of([] { euler_halving(corpus::graph("paley13")); }), ErrorCode::UnbalancedCircuit);
  // triangle: one circuit with three edges
  EXPECT_EQ(error_code_of([] { euler_halving(RotationGraph(3, {{0, 1}, {1, 2}, {2, 0}})); }),
            ErrorCode::UnbalancedCircuit);
}

TEST(TwoFactorize, SpanningTwoFactors) {
  for (const char* name : {"k5", "k44", "paley13"}) {
    SCOPED_TRACE(name);
    const RotationGraph g = corpus::graph(name);
    const auto factors = two_factorize(g);
    ASSERT_EQ(static_cast<int>(factors.size()), g.degree(0) / 2);
    std::vector<std::vector<EdgeId>> parts;
    for (const Factor& f : factors) {
      EXPECT_TRUE(all_degrees(g, f.edges, 2));
      EXPECT_TRUE(is_spanning_factor(g, f));
      int covered = 0;
      for (const auto& cycle : factor_cycles(g, f.edges)) covered += static_cast<int>(cycle.size());
      EXPECT_EQ(covered, g.vertex_count());
      parts.push_back(f.edges);
    }
    EXPECT_TRUE(partitions_edges(g, parts));
  }
  EXPECT_EQ(error_code_of([] { two_factorize(corpus::graph("petersen")); }), ErrorCode::NotEvenRegular);
}

TEST(BipartiteColoring, PerfectMatchings) {
  for (const char* name : {"k33", "k44", "cube"}) {
    SCOPED_TRACE(name);
    const RotationGraph g = corpus::graph(name);
    const auto colors = bipartite_edge_coloring(g);
    ASSERT_EQ(static_cast<int>(colors.size()), g.degree(0));
    for (const auto& m : colors) EXPECT_TRUE(all_degrees(g, m, 1));
    EXPECT_TRUE(partitions_edges(g, colors));
  }
  EXPECT_EQ(error_code_of([] { bipartite_edge_coloring(corpus::graph("k5")); }), ErrorCode::NotRegularBipartite);
}

TEST(BipartiteColoring, MultigraphColoring) {
  // 3-regular bipartite multigraph with a doubled edge
  const std::vector<std::pair<int, int>> edges{{0, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 0}};
  const auto color = regular_bipartite_coloring(2, 2, edges, 3);
  std::set<std::pair<int, int>> left, right;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_TRUE(left.insert({edges[i].first, color[i]}).second);
    EXPECT_TRUE(right.insert({edges[i].second, color[i]}).second);
  }
}

TEST(CycleSearch, HamiltonianCycles) {
  const RotationGraph petersen = corpus::graph("petersen");
  const CycleSearch none = hamiltonian_cycle(petersen);
  EXPECT_EQ(none.status, SearchStatus::absent);

  const RotationGraph paley = corpus::graph("paley13");
  const CycleSearch found = hamiltonian_cycle(paley);
  ASSERT_EQ(found.status, SearchStatus::found);
  ASSERT_EQ(static_cast<int>(found.cycle.size()), 13);
  EXPECT_EQ(std::set<VertexId>(found.cycle.begin(), found.cycle.end()).size(), 13u);
  for (std::size_t i = 0; i < found.cycle.size(); ++i) {
    EXPECT_TRUE(paley.has_edge(found.cycle[i], found.cycle[(i + 1) % found.cycle.size()]));
  }
  EXPECT_EQ(hamiltonian_cycle(petersen, 3).status, SearchStatus::unknown);
}

TEST(CycleSearch, EvenTwoFactor) {
  const FactorSearch cube = even_two_factor(corpus::graph("cube"));
  ASSERT_EQ(cube.status, SearchStatus::found);
  for (const auto& c : factor_cycles(corpus::graph("cube"), cube.factor->edges)) EXPECT_EQ(c.size() % 2, 0u);
  // K4's 2-factors are 4-cycles; K5 only has odd 2-factors
  EXPECT_EQ(even_two_factor(corpus::graph("k5")).status, SearchStatus::absent);
}

TEST(CircularPlan, CasesFollowTheDegree) {
  const std::map<std::string, std::vector<PlanCase>> expected{
      {"k5", {PlanCase::div4}},
      {"k44", {PlanCase::div4}},
      {"wagner", {PlanCase::odd}},
      {"petersen", {PlanCase::odd}},
      {"nauru", {PlanCase::odd}},
      {"k33", {PlanCase::odd}},
      {"paley13", {PlanCase::two_mod_4_hamiltonian, PlanCase::two_mod_4_bipartite}},
  };
  for (const auto& [name, cases] : expected) {
    SCOPED_TRACE(name);
    const RotationGraph g = corpus::graph(name);
    const DecompositionPlan plan = circular_plan(g);
    EXPECT_NE(std::find(cases.begin(), cases.end(), plan.plan_case), cases.end()) << to_string(plan.plan_case);
    EXPECT_EQ(plan.degree, g.degree(0));
    EXPECT_TRUE(plan_is_valid(g, plan));
    std::vector<std::vector<EdgeId>> parts;
    for (const Factor& f : plan.factors) parts.push_back(f.edges);
    EXPECT_TRUE(partitions_edges(g, parts));
  }
}

TEST(CircularPlan, Rejections) {
  EXPECT_EQ(error_code_of([] { circular_plan(corpus::graph("no-pm-cubic")); }), ErrorCode::NoPerfectMatching);
  EXPECT_EQ(error_code_of([] { circular_plan(corpus::graph("fan7")); }), ErrorCode::NotRegular);
  EXPECT_EQ(error_code_of([] { circular_plan(corpus::graph("paley13"), 2); }), ErrorCode::SearchBudgetExceeded);
}

TEST(CircularPlan, TamperedPlanIsInvalid) {
  const RotationGraph g = corpus::graph("k44");
  DecompositionPlan plan = circular_plan(g);
  ASSERT_FALSE(plan.factors.empty());
  plan.factors[0].edges.pop_back();
  EXPECT_FALSE(plan_is_valid(g, plan));
}
