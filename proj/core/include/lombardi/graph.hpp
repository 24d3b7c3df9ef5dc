#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lombardi {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Simple undirected graph with a cyclic (counterclockwise) order of
/// neighbors at every vertex. Vertex ids are dense; names live at the I/O
/// boundary.
class RotationGraph {
 public:
  RotationGraph() = default;
  /// Throws MultiEdge on loops or repeated edges. The rotation defaults to
  /// the order in which edges were listed and is flagged as unspecified.
  RotationGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> names = {});

  /// Throws InvalidRotation unless `ccw` is a permutation of v's neighbors.
  void set_rotation(VertexId v, std::vector<VertexId> ccw);
  bool rotation_specified() const { return rotation_specified_; }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_[v]; }
  const std::vector<VertexId>& rotation(VertexId v) const { return rotation_[v]; }
  /// Position of w in v's rotation; throws InvalidRotation if not adjacent.
  int rotation_index(VertexId v, VertexId w) const;

  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  static std::uint64_t key(VertexId u, VertexId v);

  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<std::string> names_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  bool rotation_specified_ = false;
};

struct DegeneracyOrder {
  std::vector<VertexId> removal_order;  // insert in reverse
  int degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex (lowest id on ties).
DegeneracyOrder degeneracy_order(const RotationGraph& g);

struct GraphProfile {
  int n = 0;
  int m = 0;
  std::optional<int> regular_degree;
  bool bipartite = false;
  std::vector<int> two_coloring;          // 0/1 per vertex when bipartite
  std::vector<int> component;             // component id per vertex
  int component_count = 0;
  bool bridgeless = false;
  std::vector<EdgeId> bridges;
  int degeneracy = 0;
  std::vector<VertexId> elimination_order;
};

GraphProfile classify(const RotationGraph& g);

/// Bridges via low-link numbering.
std::vector<EdgeId> find_bridges(const RotationGraph& g);

/// Subgraph on the same vertex set keeping only the listed edges.
RotationGraph edge_subgraph(const RotationGraph& g, std::span<const EdgeId> keep);

}  // namespace lombardi
