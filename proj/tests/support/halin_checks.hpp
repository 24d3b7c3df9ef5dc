#pragma once

#include <complex>
#include <random>

#include "drawing_audit.hpp"
#include "lombardi/halin_layout.hpp"

namespace halin_check {

using namespace lombardi;

// Plane tree without degree-2 nodes: every expanded leaf gets 2..4 children.
inline RotationGraph random_halin_tree(int max_n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> children(1);
  std::vector<int> parent{-1};
  auto add_children = [&](int v, int k) {
    for (int i = 0; i < k; ++i) {
      children[v].push_back(static_cast<int>(parent.size()));
      parent.push_back(v);
      children.emplace_back();
    }
  };
  add_children(0, std::uniform_int_distribution<int>(3, 5)(rng));
  for (;;) {
    std::vector<int> leaves;
    for (int v = 1; v < static_cast<int>(parent.size()); ++v) {
      if (children[v].empty()) leaves.push_back(v);
    }
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    if (static_cast<int>(parent.size()) + k > max_n) break;
    add_children(leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)], k);
  }
  std::vector<Edge> edges;
  for (int v = 1; v < static_cast<int>(parent.size()); ++v) edges.push_back({parent[v], v});
  RotationGraph g(static_cast<int>(parent.size()), edges);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> ccw;
    if (parent[v] >= 0) ccw.push_back(parent[v]);
    ccw.insert(ccw.end(), children[v].begin(), children[v].end());
    g.set_rotation(v, ccw);
  }
  return g;
}

// Disk automorphism written out independently of the library.
inline std::complex<double> recentre(std::complex<double> a, std::complex<double> z) {
  return (z - a) / (1.0 - std::conj(a) * z);
}

struct Checked {
  double leaf_orthogonality = 0.0;  // worst |angle - pi/2| of tree edges at leaves
  double outer_angle = 0.0;         // worst |angle - pi/6| of cycle edges
  double residual = 0.0;            // worst recomputed bisection residual
  double reported_residual = 0.0;
  double radius_defect = 0.0;       // leaves off the unit circle
};

inline double angle_to_radial(oracle::Vec at, double tangent) {
  // angle in [0, pi/2] between the tangent line and the radial line at `at`
  const double radial = std::atan2(at.y, at.x);
  const double d = std::abs(std::remainder(tangent - radial, oracle::kPi));
  return d;
}

inline Checked check(const HalinGraph& h, const HalinDrawing& out) {
  Checked c;
  const Drawing& d = out.drawing;
  const RootedTree& t = h.tree;
  for (int e = 0; e < d.edge_count(); ++e) {
    const DrawnEdge& de = d.edges[e];
    const oracle::Vec p = audit::vec(de.arc.point_at(0.0)), m = audit::vec(de.arc.point_at(0.5)),
                      q = audit::vec(de.arc.point_at(1.0));
    const double tp = oracle::tangent_via_circumcenter(p, m, q), tq = oracle::tangent_via_circumcenter(q, m, p);
    if (h.tree_edge[e]) {
      if (t.is_leaf(de.u)) c.leaf_orthogonality = std::max(c.leaf_orthogonality, angle_to_radial(p, tp));
      if (t.is_leaf(de.v)) c.leaf_orthogonality = std::max(c.leaf_orthogonality, angle_to_radial(q, tq));
    } else {
      // 30 degrees to the circle is 60 degrees to the radial line
      c.outer_angle = std::max(c.outer_angle, std::abs(angle_to_radial(p, tp) - oracle::kPi / 3));
      c.outer_angle = std::max(c.outer_angle, std::abs(angle_to_radial(q, tq) - oracle::kPi / 3));
    }
  }
  for (VertexId v = 0; v < t.size(); ++v) {
    if (t.is_leaf(v)) {
      c.radius_defect = std::max(c.radius_defect, std::abs(oracle::norm(audit::vec(d.positions[v])) - 1.0));
      continue;
    }
    if (v == t.root) continue;
    const VertexId p = t.parent[v];
    const std::complex<double> pz(d.positions[p].x, d.positions[p].y), vz(d.positions[v].x, d.positions[v].y);
    const double s = std::abs(recentre(pz, vz));
    const double theta = oracle::opening_along_bisector(s, oracle::kPi / t.degree(p));
    c.residual = std::max(c.residual, std::abs(theta - oracle::kPi * (1.0 - 1.0 / t.degree(v))));
    c.reported_residual = std::max(c.reported_residual, out.hyperbolic.residuals[v]);
  }
  return c;
}

}  // namespace halin_check
