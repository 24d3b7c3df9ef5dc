#pragma once

#include <algorithm>
#include <vector>

#include "lombardi/drawing.hpp"
#include "lombardi/graph.hpp"
#include "oracles.hpp"

namespace audit {

inline oracle::Vec vec(lombardi::Point p) { return {p.x, p.y}; }

/// Worst angular-resolution defect over all vertices, from three sampled
/// points per arc rather than from the stored bulge.
inline double max_resolution_defect(const lombardi::Drawing& d) {
  std::vector<std::vector<double>> at(d.vertex_count());
  for (const auto& e : d.edges) {
    const oracle::Vec p = vec(e.arc.point_at(0.0)), m = vec(e.arc.point_at(0.5)), q = vec(e.arc.point_at(1.0));
    at[e.u].push_back(oracle::tangent_via_circumcenter(p, m, q));
    at[e.v].push_back(oracle::tangent_via_circumcenter(q, m, p));
  }
  double worst = 0.0;
  for (const auto& dirs : at) worst = std::max(worst, oracle::spacing_deviation(dirs));
  return worst;
}

/// True when, at every vertex, the arcs leave in the counterclockwise order
/// of the graph's rotation.
inline bool respects_rotation(const lombardi::Drawing& d, const lombardi::RotationGraph& g) {
  for (lombardi::VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, lombardi::VertexId>> leaving;
    for (const auto& e : d.edges) {
      if (e.u != v && e.v != v) continue;
      const bool forward = e.u == v;
      const oracle::Vec p = vec(e.arc.point_at(forward ? 0.0 : 1.0));
      const oracle::Vec q = vec(e.arc.point_at(forward ? 1.0 : 0.0));
      const oracle::Vec m = vec(e.arc.point_at(0.5));
      leaving.emplace_back(std::remainder(oracle::tangent_via_circumcenter(p, m, q), 2.0 * oracle::kPi),
                           forward ? e.v : e.u);
    }
    std::sort(leaving.begin(), leaving.end());
    const auto& rot = g.rotation(v);
    if (leaving.size() != rot.size()) return false;
    if (rot.empty()) continue;
    const auto start = std::find_if(leaving.begin(), leaving.end(), [&](auto& x) { return x.second == rot[0]; });
    if (start == leaving.end()) return false;
    const std::size_t s = static_cast<std::size_t>(start - leaving.begin());
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (leaving[(s + i) % rot.size()].second != rot[i]) return false;
    }
  }
  return true;
}

/// Worst distance of a vertex from the host circle.
inline double max_cocircularity_defect(const lombardi::Drawing& d, lombardi::Circle host) {
  double worst = 0.0;
  for (auto p : d.positions) worst = std::max(worst, std::abs(oracle::norm(vec(p) - vec(host.center)) - host.radius));
  return worst;
}

}  // namespace audit
