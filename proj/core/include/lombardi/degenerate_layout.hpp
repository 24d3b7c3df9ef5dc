#pragma once

// Incremental Lombardi layout along a degeneracy order. Vertices with two
// placed neighbors go on the meeting locus; with three, on the common point
// of three loci.

#include <cstdint>
#include <random>
#include <vector>

#include "lombardi/drawing.hpp"

namespace lombardi {

struct DegenerateOptions {
  std::uint64_t seed = 0;
  double clearance = 1e-6;
  double edge_length = 1.0;  // first try for vertices with one placed neighbor
  int samples = 256;         // locus samples per attempt
  int restarts = 16;         // fresh runs after a blocked placement
  bool greedy = true;        // clearest candidate; otherwise a random clear one
  double grid_spacing = 10.0;
};

/// Growing drawing: only placed vertices and drawn edges are meaningful.
class PartialState {
 public:
  PartialState(const RotationGraph& g, const DegenerateOptions& opts);

  const RotationGraph& graph() const { return *g_; }
  const Drawing& drawing() const { return drawing_; }
  Drawing& drawing() { return drawing_; }
  bool placed(VertexId v) const { return placed_[v]; }
  bool drawn(EdgeId e) const { return drawn_[e]; }
  const std::vector<VertexId>& insertion_order() const { return order_; }
  std::mt19937_64& rng() { return rng_; }
  const DegenerateOptions& options() const { return opts_; }

  /// Slot direction at placed vertex `at` for its edge towards `to`.
  Direction slot(VertexId at, VertexId to) const;

  /// Smallest distance from x to placed vertices (except `skip`) and drawn arcs.
  double clearance_of_point(Point x, std::initializer_list<VertexId> skip = {}) const;
  /// Smallest distance from a new arc to placed vertices other than its ends.
  double clearance_of_arc(const Arc& a, std::initializer_list<VertexId> ends) const;

  void place(VertexId v, Point x);
  void set_frame(VertexId v, VertexFrame f) { drawing_.frames[v] = f; }
  /// Records the arc of edge (from, to); arc must run from `from` to `to`.
  void add_arc(VertexId from, VertexId to, const Arc& arc);

 private:
  const RotationGraph* g_;
  DegenerateOptions opts_;
  Drawing drawing_;
  std::vector<bool> placed_;
  std::vector<bool> drawn_;
  std::vector<VertexId> order_;
  std::mt19937_64 rng_;
};

/// Places v on the meeting locus of its arcs from p and q, draws both arcs
/// and fixes v's frame. Throws NoClearPoint.
Point place_degree2(PartialState& s, VertexId v, VertexId p, VertexId q);

/// Earlier random choices can block a later vertex, so a blocked run starts
/// over, non-greedy, with the next seed of a sequence derived from
/// opts.seed; the last failure is rethrown. Throws NotTwoDegenerate or NoClearPoint.
Drawing draw_2degenerate(const RotationGraph& g, const DegenerateOptions& opts = {});

/// Throws NotThreeDegenerate, CoincidentPlacement or NoClearPoint.
Drawing draw_3degenerate(const RotationGraph& g, const DegenerateOptions& opts = {});

}  // namespace lombardi
