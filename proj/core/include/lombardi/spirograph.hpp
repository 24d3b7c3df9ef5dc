#pragma once

// Drawings with n-fold rotational symmetry on concentric circles. The input
// describes one representative of every vertex and edge orbit; vertex k of
// circle c sits at angle 2 pi k / n (plus an optional half step) on radius
// r_c, and all vertices of a circle share one frame twist.

#include <optional>
#include <vector>

#include "lombardi/drawing.hpp"
#include "lombardi/graph.hpp"

namespace lombardi {

struct SpiroCircle {
  bool half_step = false;         // rotate the circle by pi / n
  std::optional<double> radius;  // fixed instead of solved
};

struct OrbitEndpoint {
  int circle = 0;
  int offset = 0;
};

/// Edges (from.circle, k + from.offset) -- (to.circle, k + to.offset).
struct EdgeOrbit {
  OrbitEndpoint from;
  OrbitEndpoint to;

  int step(int n) const { return (((to.offset - from.offset) % n) + n) % n; }
};

/// One end of an edge orbit as seen from a vertex.
struct OrbitRef {
  int orbit = 0;
  bool at_from = true;

  friend bool operator==(const OrbitRef&, const OrbitRef&) = default;
};

struct SpiroSpec {
  int symmetry = 0;
  std::vector<SpiroCircle> circles;
  std::vector<EdgeOrbit> orbits;
  std::vector<std::vector<OrbitRef>> order;  // per circle, counterclockwise

  int vertex_id(int circle, int k) const;
  /// Edge orbit joining a circle to itself at distance n / 2; each of its
  /// edges is counted once and appears once in the rotation.
  bool is_half_orbit(int orbit) const;
};

struct SpiroGraph {
  RotationGraph graph;
  std::vector<int> edge_orbit;  // orbit of every edge
};

/// Checks the spec and builds the symmetric graph with its rotation. Throws
/// ParseError, InvalidRotation, MultiEdgeOnExpansion or
/// TooManyInwardNeighbors.
SpiroGraph expand_spiro(const SpiroSpec& spec);

enum class RadiusSource { fixed, solved, heuristic };

struct CircleSolution {
  double radius = 1.0;
  double twist = 0.0;  // frame base relative to the outward radial
  RadiusSource source = RadiusSource::fixed;
  std::vector<double> residuals;  // every angular constraint at the solution
  int sign_changes = -1;          // of the radius equation over the bracket
};

struct SpiroOptions {
  double growth = 2.0;  // heuristic radius ratio to the next inner circle
  double shrink = 0.75;
  int shrink_steps = 8;
  double bracket = 64.0;  // radius search runs over (r_inner, bracket * r_inner)
  int samples = 512;
  double clearance = 1e-6;
};

/// Solves the radius and twist of `circle` given all inner circles. Throws
/// RootFindingFailed or InconsistentThirdConstraint.
CircleSolution solve_circle(const SpiroSpec& spec, const SpiroGraph& expanded, int circle,
                            const std::vector<CircleSolution>& inner,
                            const SpiroOptions& options = {});

struct SpiroDrawing {
  SpiroGraph expanded;
  std::vector<CircleSolution> circles;
  Drawing drawing;
};

SpiroDrawing draw_spirograph(const SpiroSpec& spec, const SpiroOptions& options = {});

/// Largest coordinate mismatch between the drawing rotated by 2 pi / n and
/// the drawing with vertex k of every circle renamed k + 1.
double symmetry_defect(const SpiroSpec& spec, const Drawing& d);

}  // namespace lombardi
