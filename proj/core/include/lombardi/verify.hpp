#pragma once

// Independent checks of a Drawing. Everything is recomputed from positions
// and arcs; frames are audited separately.

#include <optional>
#include <vector>

#include "lombardi/drawing.hpp"

namespace lombardi {

inline constexpr double kDefaultClearance = 1e-6;

struct IncidenceViolation {
  int edge = 0;
  VertexId vertex = 0;
  double distance = 0.0;
};

struct Crossing {
  int first = 0;
  int second = 0;
  Point point;
  bool grazing = false;
};

struct VerificationReport {
  std::vector<double> deviation;  // per vertex, radians
  double max_deviation = 0.0;
  VertexId worst_vertex = -1;
  double endpoint_mismatch = 0.0;  // arc endpoints vs vertex positions
  std::vector<IncidenceViolation> incidence;
  std::vector<Crossing> crossings;  // hard crossings and grazing contacts
  int crossing_count = 0;           // hard crossings only
  int grazing_count = 0;
  std::optional<double> cocircularity;  // max | |v - c| - r | for a host circle
  bool planar = true;

  /// Resolution within `angle_tol`, endpoints consistent, no incidences.
  bool clean(double angle_tol) const;
};

/// Angular spacing of the recomputed tangents at every vertex. Degree-1 and
/// isolated vertices report 0.
VerificationReport resolution_report(const Drawing& d);

/// Fills incidence and crossing fields of `r`.
void incidence_and_crossings(const Drawing& d, VerificationReport& r,
                             double clearance = kDefaultClearance);

/// Both passes plus co-circularity when the drawing has a host circle.
VerificationReport verify_drawing(const Drawing& d, double clearance = kDefaultClearance);

/// Largest angle between an arc's end tangent and the frame slot recorded
/// for it. Edges without slots are skipped.
double frame_mismatch(const Drawing& d);

}  // namespace lombardi
