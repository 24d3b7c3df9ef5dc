#include "lombardi/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "lombardi/error.hpp"

namespace lombardi {

std::uint64_t RotationGraph::key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

RotationGraph::RotationGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<std::string> names)
    : edges_(std::move(edges)),
      adjacency_(vertex_count),
      incidence_(vertex_count),
      names_(std::move(names)) {
  if (names_.empty()) {
    for (int v = 0; v < vertex_count; ++v) names_.push_back(std::to_string(v));
  }
  if (static_cast<int>(names_.size()) != vertex_count) {
    throw Error(ErrorCode::ParseError, "name list does not match vertex count");
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::ParseError, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::MultiEdge, "loop at vertex " + names_[u]);
    if (!edge_index_.emplace(key(u, v), e).second) {
      throw Error(ErrorCode::MultiEdge, "repeated edge " + names_[u] + "-" + names_[v]);
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
  }
  rotation_ = adjacency_;
}

void RotationGraph::set_rotation(VertexId v, std::vector<VertexId> ccw) {
  std::vector<VertexId> a = ccw;
  std::vector<VertexId> b = adjacency_[v];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw Error(ErrorCode::InvalidRotation,
                "rotation at " + names_[v] + " is not a permutation of its neighbors");
  }
  rotation_[v] = std::move(ccw);
  rotation_specified_ = true;
}

int RotationGraph::rotation_index(VertexId v, VertexId w) const {
  const auto& r = rotation_[v];
  const auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end()) {
    throw Error(ErrorCode::InvalidRotation, names_[w] + " is not adjacent to " + names_[v]);
  }
  return static_cast<int>(it - r.begin());
}

std::optional<EdgeId> RotationGraph::edge_between(VertexId u, VertexId v) const {
  const auto it = edge_index_.find(key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

DegeneracyOrder degeneracy_order(const RotationGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrder out;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    out.removal_order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  return out;
}

std::vector<EdgeId> find_bridges(const RotationGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> bridges;
  int counter = 0;
  // Iterative DFS: (vertex, parent edge, next incidence index).
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const VertexId w = g.edge(e).other(f.v);
        if (order[w] < 0) {
          order[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > order[parent]) bridges.push_back(done.via);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

GraphProfile classify(const RotationGraph& g) {
  GraphProfile p;
  p.n = g.vertex_count();
  p.m = g.edge_count();
  if (p.n > 0) {
    const int d0 = g.degree(0);
    bool regular = true;
    for (VertexId v = 1; v < p.n; ++v) regular = regular && g.degree(v) == d0;
    if (regular) p.regular_degree = d0;
  }
  p.component.assign(p.n, -1);
  p.two_coloring.assign(p.n, -1);
  p.bipartite = true;
  for (VertexId s = 0; s < p.n; ++s) {
    if (p.component[s] >= 0) continue;
    std::queue<VertexId> q;
    q.push(s);
    p.component[s] = p.component_count;
    p.two_coloring[s] = 0;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v)) {
        if (p.component[w] < 0) {
          p.component[w] = p.component_count;
          p.two_coloring[w] = 1 - p.two_coloring[v];
          q.push(w);
        } else if (p.two_coloring[w] == p.two_coloring[v]) {
          p.bipartite = false;
        }
      }
    }
    ++p.component_count;
  }
  if (!p.bipartite) p.two_coloring.clear();
  p.bridges = find_bridges(g);
  p.bridgeless = p.bridges.empty();
  const auto deg = degeneracy_order(g);
  p.degeneracy = deg.degeneracy;
  p.elimination_order = deg.removal_order;
  return p;
}

RotationGraph edge_subgraph(const RotationGraph& g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeId e : keep) edges.push_back(g.edge(e));
  return RotationGraph(g.vertex_count(), std::move(edges), g.names());
}

}  // namespace lombardi
