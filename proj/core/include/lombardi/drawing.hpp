#pragma once

// A concrete drawing: vertex positions, per-vertex slot frames and one arc
// per edge. Layout engines produce it; verify and the I/O layer consume it.

#include <optional>
#include <string>
#include <vector>

#include "lombardi/geometry.hpp"
#include "lombardi/graph.hpp"

namespace lombardi {

/// Evenly spaced slots around a vertex: slot k = base + 2pi k / degree.
struct VertexFrame {
  Direction base;
  int degree = 0;

  Direction slot(int k) const;
};

struct DrawnEdge {
  VertexId u = 0;
  VertexId v = 0;
  Arc arc;          // runs from positions[u] to positions[v]
  int slot_u = -1;  // -1 when no slot was recorded
  int slot_v = -1;
  int factor = -1;  // decomposition factor, if any
};

struct Drawing {
  std::vector<std::string> names;
  std::vector<Point> positions;
  std::vector<VertexFrame> frames;
  std::vector<DrawnEdge> edges;
  std::optional<Circle> host;  // common circle of circular drawings

  int vertex_count() const { return static_cast<int>(positions.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  /// Tangent leaving vertex `at` along edge e.
  Direction tangent_at(int e, VertexId at) const;
};

/// Drawing sized for g with names and edge endpoints copied; arcs unset.
Drawing blank_drawing(const RotationGraph& g);

/// Frame whose slot `index` points along `dir`.
VertexFrame frame_with_slot(Direction dir, int index, int degree);

}  // namespace lombardi
