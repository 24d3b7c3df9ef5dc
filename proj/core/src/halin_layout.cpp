#include "lombardi/halin_layout.hpp"

#include <algorithm>
#include <functional>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

std::vector<std::vector<VertexId>> tree_adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void require_spanning_tree(int n, const std::vector<Edge>& edges) {
  if (n < 4 || static_cast<int>(edges.size()) != n - 1) {
    throw Error(ErrorCode::InvalidHalin, "tree needs at least 4 vertices and exactly n-1 edges");
  }
  const auto adj = tree_adjacency(n, edges);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw Error(ErrorCode::InvalidHalin, "tree edges do not connect all vertices");
}

// Parent pointers and children in the order given by `order_at`, which
// returns v's tree neighbors counterclockwise.
RootedTree orient(int n, VertexId root,
                  const std::function<std::vector<VertexId>(VertexId)>& order_at) {
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  std::vector<VertexId> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    std::vector<VertexId> ring = order_at(v);
    if (v != root) {
      const auto at = std::find(ring.begin(), ring.end(), t.parent[v]);
      std::rotate(ring.begin(), at, ring.end());
      ring.erase(ring.begin());
    }
    for (VertexId w : ring) {
      seen[w] = true;
      t.parent[w] = v;
      t.children[v].push_back(w);
      stack.push_back(w);
    }
  }
  return t;
}

// Rotation of the Halin graph: tree order at internal nodes, and
// [parent, previous leaf, next leaf] at leaves.
void apply_rotation(RotationGraph& g, const RootedTree& t) {
  const std::vector<VertexId> leaves = t.leaves();
  const int k = static_cast<int>(leaves.size());
  for (VertexId v = 0; v < t.size(); ++v) {
    if (t.is_leaf(v)) continue;
    std::vector<VertexId> ring;
    if (t.parent[v] >= 0) ring.push_back(t.parent[v]);
    ring.insert(ring.end(), t.children[v].begin(), t.children[v].end());
    g.set_rotation(v, ring);
  }
  for (int i = 0; i < k; ++i) {
    const VertexId v = leaves[i];
    g.set_rotation(v, {t.parent[v], leaves[(i + k - 1) % k], leaves[(i + 1) % k]});
  }
}

HalinGraph assemble(int n, const std::vector<Edge>& tree_edges, const RootedTree& t,
                    const std::vector<std::string>& names) {
  std::vector<Edge> edges = tree_edges;
  const std::vector<VertexId> leaves = t.leaves();
  if (leaves.size() < 3) throw Error(ErrorCode::InvalidHalin, "a Halin graph needs at least 3 leaves");
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    edges.push_back({leaves[i], leaves[(i + 1) % leaves.size()]});
  }
  HalinGraph h{RotationGraph(n, edges, names), {}, t};
  h.tree_edge.assign(edges.size(), false);
  std::fill(h.tree_edge.begin(), h.tree_edge.begin() + static_cast<long>(tree_edges.size()), true);
  apply_rotation(h.graph, t);
  return h;
}

Wedge wedge_around(const HPoint& apex, Direction ray, int degree) {
  const double half = kPi / degree;
  return {apex, ray.rotated(-half), ray.rotated(half)};
}

}  // namespace

std::vector<VertexId> RootedTree::leaves() const {
  std::vector<VertexId> out;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (is_leaf(v)) out.push_back(v);
    for (VertexId c : children[v]) walk(c);
  };
  walk(root);
  return out;
}

std::vector<VertexId> RootedTree::by_depth() const {
  std::vector<int> depth(size(), 0);
  std::vector<VertexId> order{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId c : children[order[i]]) {
      depth[c] = depth[order[i]] + 1;
      order.push_back(c);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return depth[a] != depth[b] ? depth[a] < depth[b] : a < b;
  });
  return order;
}

VertexId tree_centroid(int n, const std::vector<std::vector<VertexId>>& adj) {
  // Subtree sizes from vertex 0.
  std::vector<VertexId> parent(n, -1), order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  }
  VertexId best = -1;
  int best_worst = n + 1;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() < 2) continue;
    int worst = n - size[v];
    for (VertexId w : adj[v]) {
      if (parent[w] == v) worst = std::max(worst, size[w]);
    }
    if (worst < best_worst) {
      best_worst = worst;
      best = v;
    }
  }
  return best;
}

HalinGraph halin_from_tree(const RotationGraph& tree, std::optional<VertexId> root) {
  const int n = tree.vertex_count();
  require_spanning_tree(n, tree.edges());
  const VertexId r = root.value_or(tree_centroid(n, tree_adjacency(n, tree.edges())));
  if (r < 0 || r >= n || tree.degree(r) < 2) throw Error(ErrorCode::InvalidHalin, "root must be an internal node");
  const RootedTree t = orient(n, r, [&](VertexId v) { return tree.rotation(v); });
  return assemble(n, tree.edges(), t, tree.names());
}

HalinGraph halin_from_graph(const RotationGraph& g, const std::vector<EdgeId>& tree_edges,
                            std::optional<VertexId> root) {
  const int n = g.vertex_count();
  std::vector<bool> in_tree(g.edge_count(), false);
  std::vector<Edge> tedges;
  for (EdgeId e : tree_edges) {
    if (e < 0 || e >= g.edge_count() || in_tree[e]) throw Error(ErrorCode::InvalidHalin, "bad tree edge list");
    in_tree[e] = true;
    tedges.push_back(g.edge(e));
  }
  require_spanning_tree(n, tedges);
  const auto adj = tree_adjacency(n, tedges);

  // The remaining edges must form one cycle through exactly the leaves.
  std::vector<std::vector<VertexId>> ring(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    ring[g.edge(e).u].push_back(g.edge(e).v);
    ring[g.edge(e).v].push_back(g.edge(e).u);
  }
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    const bool leaf = adj[v].size() == 1;
    if (ring[v].size() != (leaf ? 2u : 0u)) {
      throw Error(ErrorCode::InvalidHalin, "non-tree edges are not a cycle through the leaves");
    }
    if (leaf) leaves.push_back(v);
  }
  std::vector<VertexId> cycle{leaves.front()};
  VertexId prev = leaves.front();
  VertexId cur = std::min(ring[prev][0], ring[prev][1]);
  while (cur != leaves.front()) {
    cycle.push_back(cur);
    const VertexId next = ring[cur][0] == prev ? ring[cur][1] : ring[cur][0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != leaves.size()) throw Error(ErrorCode::InvalidHalin, "leaf edges form several cycles");
  const int k = static_cast<int>(cycle.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < k; ++i) pos[cycle[i]] = i;

  const VertexId r = root.value_or(tree_centroid(n, adj));
  if (r < 0 || r >= n || adj[r].size() < 2) throw Error(ErrorCode::InvalidHalin, "root must be an internal node");

  // Leaves below each vertex form one interval of the cycle; children are
  // ordered by where their intervals start.
  std::vector<VertexId> parent(n, -1), order{r};
  std::vector<bool> seen(n, false);
  seen[r] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<bool>> below(n, std::vector<bool>(k, false));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (pos[v] >= 0) below[v][pos[v]] = true;
    if (parent[v] >= 0) {
      for (int i = 0; i < k; ++i) {
        if (below[v][i]) below[parent[v]][i] = true;
      }
    }
  }
  std::vector<int> start(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v == r) continue;
    int starts = 0;
    for (int i = 0; i < k; ++i) {
      if (below[v][i] && !below[v][(i + k - 1) % k]) {
        start[v] = i;
        ++starts;
      }
    }
    if (starts != 1) throw Error(ErrorCode::InvalidHalin, "leaf cycle is not in embedding order");
  }
  const RootedTree t = orient(n, r, [&](VertexId v) {
    std::vector<VertexId> kids;
    for (VertexId w : adj[v]) {
      if (w != parent[v]) kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(), [&](VertexId a, VertexId b) {
      return (start[a] - start[v] + k) % k < (start[b] - start[v] + k) % k;
    });
    if (parent[v] >= 0) kids.insert(kids.begin(), parent[v]);
    return kids;
  });

  HalinGraph h{g, in_tree, t};
  apply_rotation(h.graph, t);
  return h;
}

HyperbolicTreeDrawing good_hyperbolic_tree(const RootedTree& t) {
  const int n = t.size();
  HyperbolicTreeDrawing h;
  h.nodes.assign(n, HPoint{});
  h.regions.assign(n, std::nullopt);
  h.residuals.assign(n, 0.0);

  const auto place_children = [&](VertexId v, Direction first_ray) {
    const int d = t.degree(v);
    for (std::size_t j = 0; j < t.children[v].size(); ++j) {
      const Direction ray = first_ray.rotated(kTwoPi * static_cast<double>(j) / d);
      const VertexId c = t.children[v][j];
      h.nodes[c] = ideal_endpoint(h.nodes[v], ray);
      h.regions[c] = wedge_around(h.nodes[v], ray, d);
    }
  };

  h.nodes[t.root] = HPoint::interior(Point{});
  place_children(t.root, Direction(0.0));

  for (VertexId v : t.by_depth()) {
    if (v == t.root || t.is_leaf(v)) continue;
    const VertexId p = t.parent[v];
    const int dp = t.degree(p);
    const int dv = t.degree(v);
    const double target = kPi * (1.0 - 1.0 / dv);
    const Direction ray = direction_toward(h.nodes[p], h.nodes[v]);

    // Bisection in the frame where the parent sits at the origin and the ray
    // runs along the positive x axis.
    const Wedge local = wedge_around(HPoint::interior(Point{}), Direction(0.0), dp);
    const auto opening_at = [&](double s) { return wedge_opening(HPoint::interior({s, 0.0}), local); };
    double lo = 0.0, hi = 1.0;
    if (!(opening_at(lo) < target)) {
      throw Error(ErrorCode::BisectionFailed,
                  "no interior position for vertex " + std::to_string(v) +
                      ": parent wedge already as wide as required");
    }
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (opening_at(mid) < target ? lo : hi) = mid;
    }
    const double s = 0.5 * (lo + hi);
    const HPoint x = HPoint::interior(from_origin(h.nodes[p].location, s * ray.unit()));
    const Direction forward = direction_toward(x, h.nodes[v]);
    h.residuals[v] = std::abs(wedge_opening(x, *h.regions[v]) - target);
    h.nodes[v] = x;
    place_children(v, forward.reversed().rotated(kTwoPi / dv));
  }
  return h;
}

DominanceAudit audit_dominance(const RootedTree& t, const HyperbolicTreeDrawing& h) {
  const int n = t.size();
  std::vector<std::vector<HPoint>> samples(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!h.regions[v]) continue;
    const Wedge& w = *h.regions[v];
    for (Direction side : {w.first, w.second}) {
      const HPoint end = ideal_endpoint(w.apex, side);
      for (int i = 0; i < 32; ++i) samples[v].push_back(point_on_ray(w.apex, end, (i + 0.5) / 32));
    }
  }
  const auto is_ancestor = [&](VertexId a, VertexId v) {
    for (VertexId u = t.parent[v]; u >= 0; u = t.parent[u]) {
      if (u == a) return true;
    }
    return false;
  };
  DominanceAudit audit;
  for (VertexId v = 0; v < n; ++v) {
    if (!h.regions[v]) continue;
    for (VertexId w = 0; w < n; ++w) {
      if (w == v || !h.regions[w] || is_ancestor(v, w)) continue;
      ++audit.pairs;
      const bool nested = is_ancestor(w, v);
      for (const HPoint& z : samples[v]) {
        const bool inside = wedge_contains(*h.regions[w], z, nested ? 1e-9 : -1e-9);
        if (inside != nested) {
          ++audit.violations;
          break;
        }
      }
    }
  }
  return audit;
}

HalinDrawing draw_halin(const HalinGraph& h) {
  const RootedTree& t = h.tree;
  HalinDrawing out{blank_drawing(h.graph), good_hyperbolic_tree(t)};
  Drawing& d = out.drawing;
  for (VertexId v = 0; v < t.size(); ++v) d.positions[v] = out.hyperbolic.nodes[v].location;

  const std::vector<VertexId> leaves = t.leaves();
  std::vector<VertexId> next(t.size(), -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) next[leaves[i]] = leaves[(i + 1) % leaves.size()];

  const Circle boundary(Point{}, 1.0);
  const RotationGraph& g = h.graph;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    Arc arc;
    if (h.tree_edge[e]) {
      if (t.parent[a] == b) std::swap(a, b);
      arc = geodesic_through(out.hyperbolic.nodes[a], out.hyperbolic.nodes[b]).arc;
    } else {
      if (next[b] == a) std::swap(a, b);
      arc = circle_through_chord_angle(boundary, d.positions[a], d.positions[b], kPi / 6, Side::outside);
    }
    d.edges[e] = {a, b, arc, g.rotation_index(a, b), g.rotation_index(b, a), h.tree_edge[e] ? 0 : 1};
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexId first = g.rotation(v).front();
    const EdgeId e = *g.edge_between(v, first);
    d.frames[v] = frame_with_slot(d.tangent_at(e, v), 0, g.degree(v));
  }
  return out;
}

}  // namespace lombardi
