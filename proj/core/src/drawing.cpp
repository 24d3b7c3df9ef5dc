#include "lombardi/drawing.hpp"

namespace lombardi {

Direction VertexFrame::slot(int k) const {
  return degree == 0 ? base : base.rotated(kTwoPi * k / degree);
}

Direction Drawing::tangent_at(int e, VertexId at) const {
  const auto [tp, tq] = endpoint_tangents(edges[e].arc);
  return edges[e].u == at ? tp : tq;
}

Drawing blank_drawing(const RotationGraph& g) {
  Drawing d;
  d.names = g.names();
  d.positions.assign(g.vertex_count(), Point{});
  d.frames.assign(g.vertex_count(), VertexFrame{});
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.frames[v].degree = g.degree(v);
  d.edges.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    d.edges[e].u = g.edge(e).u;
    d.edges[e].v = g.edge(e).v;
  }
  return d;
}

VertexFrame frame_with_slot(Direction dir, int index, int degree) {
  return {dir.rotated(-kTwoPi * index / degree), degree};
}

}  // namespace lombardi
