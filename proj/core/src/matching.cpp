#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "lombardi/decompose.hpp"
#include "lombardi/error.hpp"

namespace lombardi {

namespace {

// Edmonds' blossom shrinking with explicit base/parent arrays. O(n^3).
class Blossom {
 public:
  explicit Blossom(const RotationGraph& g)
      : n_(g.vertex_count()), adj_(n_), match_(n_, -1), blocked_(n_, false) {
    for (VertexId v = 0; v < n_; ++v) {
      adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
      std::sort(adj_[v].begin(), adj_[v].end());
    }
  }

  void solve() {
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] == -1 && !blocked_[v]) augment_from(v);
    }
  }

  /// Tries to grow the matching with an augmenting path from root.
  bool augment_from(VertexId root) {
    VertexId u = find_path(root);
    if (u == -1) return false;
    while (u != -1) {
      const VertexId pv = parent_[u];
      const VertexId ppv = match_[pv];
      match_[u] = pv;
      match_[pv] = u;
      u = ppv;
    }
    return true;
  }

  std::vector<VertexId>& match() { return match_; }
  std::vector<bool>& blocked() { return blocked_; }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId to : adj_[v]) {
        if (blocked_[to]) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const VertexId cur = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> match_;
  std::vector<bool> blocked_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

std::vector<EdgeId> to_edges(const RotationGraph& g, const std::vector<VertexId>& match) {
  std::vector<EdgeId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (match[v] > v) out.push_back(*g.edge_between(v, match[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> components_without(const RotationGraph& g,
                                                      const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<VertexId> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (VertexId w : g.neighbors(members[i])) {
        if (removed[w] || comp[w] >= 0) continue;
        comp[w] = comp[s];
        members.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<EdgeId> max_matching(const RotationGraph& g) {
  Blossom b(g);
  b.solve();
  return to_edges(g, b.match());
}

PerfectMatchingResult perfect_matching(const RotationGraph& g) {
  const int n = g.vertex_count();
  Blossom b(g);
  b.solve();
  const std::vector<VertexId> match = b.match();
  PerfectMatchingResult result;
  const bool perfect = std::none_of(match.begin(), match.end(), [](VertexId m) { return m == -1; });
  if (perfect) {
    result.matching = to_edges(g, match);
    return result;
  }

  // Gallai-Edmonds: D = vertices missed by some maximum matching. v is in D
  // iff G - v still has a matching of the same size.
  std::vector<bool> in_d(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (match[v] == -1) {
      in_d[v] = true;
      continue;
    }
    Blossom trial(g);
    trial.match() = match;
    const VertexId partner = match[v];
    trial.match()[v] = -1;
    trial.match()[partner] = -1;
    trial.blocked()[v] = true;
    in_d[v] = trial.augment_from(partner);
  }
  std::vector<bool> in_a(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (!in_d[v]) continue;
    for (VertexId w : g.neighbors(v)) {
      if (!in_d[w]) in_a[w] = true;
    }
  }
  TutteWitness w;
  for (VertexId v = 0; v < n; ++v) {
    if (in_a[v]) w.barrier.push_back(v);
  }
  for (auto& c : components_without(g, in_a)) {
    if (c.size() % 2 == 1) w.odd_components.push_back(std::move(c));
  }
  w.deficiency = static_cast<int>(w.odd_components.size()) - static_cast<int>(w.barrier.size());
  result.witness = std::move(w);
  return result;
}

bool witness_certifies(const RotationGraph& g, const TutteWitness& w) {
  std::vector<bool> removed(g.vertex_count(), false);
  for (VertexId v : w.barrier) removed[v] = true;
  int odd = 0;
  for (const auto& c : components_without(g, removed)) odd += static_cast<int>(c.size() % 2);
  return odd > static_cast<int>(w.barrier.size());
}

std::vector<int> regular_bipartite_coloring(int left, int right,
                                            const std::vector<std::pair<int, int>>& edges,
                                            int degree) {
  // Peel off one perfect matching at a time with Kuhn's augmenting paths;
  // a regular bipartite multigraph always has one (Hall).
  std::vector<int> color(edges.size(), -1);
  std::vector<std::vector<int>> out(left);  // edge ids per left vertex
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) out[edges[e].first].push_back(e);

  for (int c = 0; c < degree; ++c) {
    std::vector<int> match_right(right, -1);  // edge id matched at right vertex
    std::vector<int> visited(right, -1);
    std::function<bool(int, int)> try_left = [&](int u, int stamp) -> bool {
      for (int e : out[u]) {
        if (color[e] != -1) continue;
        const int r = edges[e].second;
        if (visited[r] == stamp) continue;
        visited[r] = stamp;
        if (match_right[r] == -1 || try_left(edges[match_right[r]].first, stamp)) {
          match_right[r] = e;
          return true;
        }
      }
      return false;
    };
    for (int u = 0; u < left; ++u) {
      if (!try_left(u, u)) {
        throw Error(ErrorCode::NotRegularBipartite, "no perfect matching in bipartite layer");
      }
    }
    for (int r = 0; r < right; ++r) color[match_right[r]] = c;
  }
  return color;
}

std::vector<std::vector<EdgeId>> bipartite_edge_coloring(const RotationGraph& g) {
  const GraphProfile prof = classify(g);
  if (!prof.bipartite || !prof.regular_degree) {
    throw Error(ErrorCode::NotRegularBipartite, "graph is not regular bipartite");
  }
  const int d = *prof.regular_degree;
  std::vector<int> side_index(g.vertex_count());
  int left = 0, right = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    side_index[v] = prof.two_coloring[v] == 0 ? left++ : right++;
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    const bool u_left = prof.two_coloring[e.u] == 0;
    edges.emplace_back(side_index[u_left ? e.u : e.v], side_index[u_left ? e.v : e.u]);
  }
  const std::vector<int> color = regular_bipartite_coloring(left, right, edges, d);
  std::vector<std::vector<EdgeId>> out(d);
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[color[e]].push_back(e);
  return out;
}

}  // namespace lombardi
