#include <gtest/gtest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "errors.hpp"
#include "lombardi/document.hpp"
#include "lombardi/graph.hpp"
#include "oracles.hpp"

using namespace lombardi;

namespace {

oracle::SimpleGraph simple(const RotationGraph& g) {
  oracle::SimpleGraph s{g.vertex_count(), {}};
  for (const Edge& e : g.edges()) s.edges.emplace_back(e.u, e.v);
  return s;
}

// Residual degree of each vertex at the moment it is removed.
int max_residual_degree(const RotationGraph& g, const std::vector<VertexId>& order) {
  std::vector<bool> gone(g.vertex_count(), false);
  int worst = 0;
  for (VertexId v : order) {
    int d = 0;
    for (VertexId w : g.neighbors(v)) d += gone[w] ? 0 : 1;
    worst = std::max(worst, d);
    gone[v] = true;
  }
  return worst;
}

// Bridges by deletion and reachability.
std::set<EdgeId> bridges_by_deletion(const RotationGraph& g) {
  const auto components = [&](EdgeId skip) {
    std::vector<int> label(g.vertex_count(), -1);
    int count = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      if (label[s] >= 0) continue;
      std::vector<VertexId> stack{s};
      label[s] = count;
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident_edges(v)) {
          if (e == skip) continue;
          const VertexId w = g.edge(e).other(v);
          if (label[w] < 0) {
            label[w] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    return count;
  };
  const int base = components(-1);
  std::set<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (components(e) > base) out.insert(e);
  }
  return out;
}

void expect_profile_matches_recount(const RotationGraph& g) {
  const GraphProfile p = classify(g);
  EXPECT_EQ(p.n, g.vertex_count());
  EXPECT_EQ(p.m, g.edge_count());
  std::set<int> degrees;
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees.insert(g.degree(v));
  if (degrees.size() == 1) {
    ASSERT_TRUE(p.regular_degree);
    EXPECT_EQ(*p.regular_degree, *degrees.begin());
  } else {
    EXPECT_FALSE(p.regular_degree);
  }
  if (p.bipartite) {
    for (const Edge& e : g.edges()) EXPECT_NE(p.two_coloring[e.u], p.two_coloring[e.v]);
  }
  const auto bridges = bridges_by_deletion(g);
  EXPECT_EQ(std::set<EdgeId>(p.bridges.begin(), p.bridges.end()), bridges);
  EXPECT_EQ(p.bridgeless, bridges.empty());
  EXPECT_EQ(p.degeneracy, oracle::degeneracy(simple(g)));
  EXPECT_LE(max_residual_degree(g, p.elimination_order), p.degeneracy);
}

}  // namespace

TEST(GraphDocument, Triangle) {
  const RotationGraph g = load_graph(R"({"vertices": ["a", "b", "c"], "edges": [["a","b"],["b","c"],["c","a"]]})");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.name(1), "b");
  EXPECT_FALSE(g.rotation_specified());
}

TEST(GraphDocument, RotationMustListNeighbors) {
  const auto code = error_code_of([] {
    load_graph(R"({"vertices": [0,1,2], "edges": [[0,1],[1,2]], "rotation": {"1": [0,2], "0": [2]}})");
  });
  EXPECT_EQ(code, ErrorCode::InvalidRotation);
  EXPECT_EQ(error_code_of([] { load_graph(R"({"vertices": [0,1], "edges": [[0,1],[1,0]]})"); }),
            ErrorCode::MultiEdge);
  EXPECT_EQ(error_code_of([] { load_graph(R"({"vertices": [0,1], "edges": [[0,3]]})"); }), ErrorCode::ParseError);
}

TEST(GraphDocument, RotationIsKept) {
  const RotationGraph g =
      load_graph(R"({"vertices": [0,1,2,3], "edges": [[0,1],[0,2],[0,3]], "rotation": {"0": [3,1,2]}})");
  EXPECT_TRUE(g.rotation_specified());
  EXPECT_EQ(g.rotation(0), (std::vector<VertexId>{3, 1, 2}));
  EXPECT_EQ(g.rotation_index(0, 1), 1);
}

TEST(GraphDocument, WriteThenReadKeepsEverything) {
  const RotationGraph g = corpus::graph("petersen");
  const RotationGraph back = load_graph(graph_to_json(g));
  EXPECT_EQ(back.vertex_count(), g.vertex_count());
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(back.rotation(v), g.rotation(v));
}

TEST(GraphCorpus, PetersenIsCubic) {
  const RotationGraph g = corpus::graph("petersen");
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  const GraphProfile p = classify(g);
  ASSERT_TRUE(p.regular_degree);
  EXPECT_EQ(*p.regular_degree, 3);
  EXPECT_FALSE(p.bipartite);
  EXPECT_TRUE(p.bridgeless);
}

TEST(Degeneracy, SmallFamilies) {
  // path tree
  const RotationGraph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  EXPECT_EQ(degeneracy_order(tree).degeneracy, 1);
  // octahedron K_{2,2,2}: every vertex misses only its antipode, so the
  // whole graph has minimum degree 4
  std::vector<Edge> oct;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 3) oct.push_back({u, v});
    }
  }
  const RotationGraph octahedron(6, oct);
  EXPECT_EQ(degeneracy_order(octahedron).degeneracy, oracle::degeneracy(simple(octahedron)));
  EXPECT_EQ(degeneracy_order(octahedron).degeneracy, 4);
  // maximal outerplanar fan: hub 0 joined to the path 1..5
  std::vector<Edge> fan;
  for (int v = 1; v < 6; ++v) fan.push_back({0, v});
  for (int v = 1; v < 5; ++v) fan.push_back({v, v + 1});
  EXPECT_EQ(degeneracy_order(RotationGraph(6, fan)).degeneracy, 2);
}

TEST(Degeneracy, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
    const oracle::SimpleGraph s = oracle::random_graph(n, p, rng);
    const RotationGraph g = oracle::to_rotation_graph(s);
    const DegeneracyOrder d = degeneracy_order(g);
    EXPECT_EQ(d.degeneracy, oracle::degeneracy(s));
    ASSERT_EQ(static_cast<int>(d.removal_order.size()), n);
    EXPECT_LE(max_residual_degree(g, d.removal_order), d.degeneracy);
  }
}

TEST(Classify, CorpusFactsRecount) {
  for (const char* name : {"k4", "k5", "k33", "k44", "cube", "wagner", "petersen", "nauru", "paley13", "no-pm-cubic",
                           "fan7", "k23", "g7", "nested2", "nested3"}) {
    SCOPED_TRACE(name);
    expect_profile_matches_recount(corpus::graph(name));
  }
}

TEST(Classify, NamedCases) {
  const GraphProfile k44 = classify(corpus::graph("k44"));
  EXPECT_EQ(k44.regular_degree, 4);
  EXPECT_TRUE(k44.bipartite);
  EXPECT_TRUE(k44.bridgeless);

  const RotationGraph cut = corpus::graph("no-pm-cubic");
  const GraphProfile branches = classify(cut);
  EXPECT_EQ(cut.vertex_count(), 16);
  EXPECT_EQ(branches.regular_degree, 3);
  EXPECT_FALSE(branches.bridgeless);
  EXPECT_EQ(branches.bridges.size(), 3u);

  const RotationGraph paley = corpus::graph("paley13");
  const std::set<int> residues{1, 3, 4, 9, 10, 12};
  for (const Edge& e : paley.edges()) EXPECT_TRUE(residues.count(((e.v - e.u) % 13 + 13) % 13));
  const GraphProfile pp = classify(paley);
  EXPECT_EQ(pp.regular_degree, 6);
  EXPECT_FALSE(pp.bipartite);
}

TEST(Subgraph, EdgeSubsetKeepsVertices) {
  const RotationGraph g = corpus::graph("k44");
  const std::vector<EdgeId> keep{0, 3, 5};
  const RotationGraph h = edge_subgraph(g, keep);
  EXPECT_EQ(h.vertex_count(), g.vertex_count());
  EXPECT_EQ(h.edge_count(), 3);
}
