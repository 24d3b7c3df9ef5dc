#pragma once

// Planar Lombardi drawings of Halin graphs: the tree is drawn with
// hyperbolic segments in the Poincare disk, leaves on the boundary, and the
// leaf cycle runs outside the disk on arcs meeting it at 30 degrees.

#include <optional>
#include <vector>

#include "lombardi/drawing.hpp"
#include "lombardi/hyperbolic.hpp"

namespace lombardi {

struct RootedTree {
  VertexId root = 0;
  std::vector<VertexId> parent;                 // -1 at the root
  std::vector<std::vector<VertexId>> children;  // counterclockwise, after the parent

  int size() const { return static_cast<int>(parent.size()); }
  bool is_leaf(VertexId v) const { return children[v].empty() && v != root; }
  int degree(VertexId v) const {
    return static_cast<int>(children[v].size()) + (parent[v] >= 0 ? 1 : 0);
  }
  /// Leaves in counterclockwise order, starting below the root's first child.
  std::vector<VertexId> leaves() const;
  /// Vertices sorted by depth, ties by id.
  std::vector<VertexId> by_depth() const;
};

/// A Halin graph with its tree: the rotation of `graph` is the planar one.
struct HalinGraph {
  RotationGraph graph;
  std::vector<bool> tree_edge;  // per edge of `graph`
  RootedTree tree;
};

/// Builds the Halin graph of a plane tree: the tree's rotation fixes the
/// leaf order. Throws InvalidHalin.
HalinGraph halin_from_tree(const RotationGraph& tree, std::optional<VertexId> root = {});

/// Splits a graph into the given tree and its leaf cycle; the embedding is
/// recovered from the cycle. Throws InvalidHalin.
HalinGraph halin_from_graph(const RotationGraph& g, const std::vector<EdgeId>& tree_edges,
                            std::optional<VertexId> root = {});

/// Internal node minimizing the largest remaining component, lowest id first.
VertexId tree_centroid(int n, const std::vector<std::vector<VertexId>>& adjacency);

struct HyperbolicTreeDrawing {
  std::vector<HPoint> nodes;
  std::vector<std::optional<Wedge>> regions;  // dominance region, absent at the root
  std::vector<double> residuals;  // |theta_x - pi (1 - 1/d')| for moved nodes, else 0
};

/// Top-down construction: every non-leaf child is pulled in from the boundary
/// along its ray until its dominance region admits its own equally spaced
/// rays. Throws BisectionFailed.
HyperbolicTreeDrawing good_hyperbolic_tree(const RootedTree& t);

struct DominanceAudit {
  int violations = 0;
  int pairs = 0;
};

/// Nested regions for ancestor pairs, disjoint otherwise; 64 boundary samples
/// per region.
DominanceAudit audit_dominance(const RootedTree& t, const HyperbolicTreeDrawing& h);

struct HalinDrawing {
  Drawing drawing;
  HyperbolicTreeDrawing hyperbolic;
};

HalinDrawing draw_halin(const HalinGraph& h);

}  // namespace lombardi
