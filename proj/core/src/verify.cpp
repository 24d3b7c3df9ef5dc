#include "lombardi/verify.hpp"

#include <algorithm>

namespace lombardi {

bool VerificationReport::clean(double angle_tol) const {
  return max_deviation < angle_tol && incidence.empty() && endpoint_mismatch < 1e-9;
}

VerificationReport resolution_report(const Drawing& d) {
  VerificationReport r;
  const int n = d.vertex_count();
  std::vector<std::vector<double>> tangents(n);
  for (int e = 0; e < d.edge_count(); ++e) {
    const DrawnEdge& de = d.edges[e];
    const auto [tp, tq] = endpoint_tangents(de.arc);
    tangents[de.u].push_back(tp.angle());
    tangents[de.v].push_back(tq.angle());
    r.endpoint_mismatch = std::max({r.endpoint_mismatch, distance(de.arc.p(), d.positions[de.u]),
                                    distance(de.arc.q(), d.positions[de.v])});
  }
  r.deviation.assign(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    auto& t = tangents[v];
    const int deg = static_cast<int>(t.size());
    if (deg < 2) continue;
    std::sort(t.begin(), t.end());
    const double want = kTwoPi / deg;
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      const double gap = i + 1 < deg ? t[i + 1] - t[i] : t[0] + kTwoPi - t[i];
      worst = std::max(worst, std::abs(gap - want));
    }
    r.deviation[v] = worst;
    if (worst > r.max_deviation || r.worst_vertex < 0) {
      r.max_deviation = worst;
      r.worst_vertex = v;
    }
  }
  return r;
}

void incidence_and_crossings(const Drawing& d, VerificationReport& r, double clearance) {
  r.incidence.clear();
  r.crossings.clear();
  for (int e = 0; e < d.edge_count(); ++e) {
    const DrawnEdge& de = d.edges[e];
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      if (v == de.u || v == de.v) continue;
      const double dist = arc_clearance(de.arc, d.positions[v]);
      if (dist < clearance) r.incidence.push_back({e, v, dist});
    }
  }
  const Tolerances tol{clearance, 1e-10};
  for (int a = 0; a < d.edge_count(); ++a) {
    for (int b = a + 1; b < d.edge_count(); ++b) {
      for (const ArcIntersection& x : intersect_arcs(d.edges[a].arc, d.edges[b].arc, tol)) {
        r.crossings.push_back({a, b, x.point, x.grazing});
      }
    }
  }
  r.crossing_count = static_cast<int>(
      std::count_if(r.crossings.begin(), r.crossings.end(), [](const Crossing& c) { return !c.grazing; }));
  r.grazing_count = static_cast<int>(r.crossings.size()) - r.crossing_count;
  r.planar = r.crossing_count == 0;
}

VerificationReport verify_drawing(const Drawing& d, double clearance) {
  VerificationReport r = resolution_report(d);
  incidence_and_crossings(d, r, clearance);
  if (d.host) {
    double worst = 0.0;
    for (Point p : d.positions) {
      worst = std::max(worst, std::abs(distance(p, d.host->center) - d.host->radius));
    }
    r.cocircularity = worst;
  }
  return r;
}

double frame_mismatch(const Drawing& d) {
  double worst = 0.0;
  for (int e = 0; e < d.edge_count(); ++e) {
    const DrawnEdge& de = d.edges[e];
    const auto [tp, tq] = endpoint_tangents(de.arc);
    if (de.slot_u >= 0) {
      worst = std::max(worst, std::abs(tp.minus(d.frames[de.u].slot(de.slot_u))));
    }
    if (de.slot_v >= 0) {
      worst = std::max(worst, std::abs(tq.minus(d.frames[de.v].slot(de.slot_v))));
    }
  }
  return worst;
}

}  // namespace lombardi
