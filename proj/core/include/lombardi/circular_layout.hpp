#pragma once

// Circular Lombardi drawings: every vertex on the unit circle, one pair of
// mirror-image slots per 2-factor.

#include <cstdint>
#include <vector>

#include "lombardi/decompose.hpp"
#include "lombardi/drawing.hpp"

namespace lombardi {

/// Slot offsets are measured at each vertex from its outward radial direction.
struct FactorSlots {
  double tail_offset = 0.0;  // forward edge leaving a vertex
  double head_offset = 0.0;  // forward edge arriving at a vertex
  bool alternating = false;  // bipartite special factor: edges alternate 0 / pi
  double angle_to_circle = 0.0;  // in [0, pi], shared by all edges of the factor
};

struct SlotAssignment {
  int degree = 0;
  double first_offset = 0.0;  // slot k sits at first_offset + 2pi k / degree
  std::vector<FactorSlots> factors;  // parallel to plan.factors
  double twist = 0.0;  // signed offset of the slot closest to the inward radial

  int slot_index(double offset) const;
};

/// Throws InfeasibleCase when the plan's case does not fit the degree.
SlotAssignment assign_slots(int degree, const DecompositionPlan& plan);

struct CircularOptions {
  std::uint64_t seed = 0;
  int max_attempts = 64;
  double jitter = 1e-3;  // radians, only used after a failed audit
  double clearance = 1e-6;
};

/// Throws InvalidPlan or PerturbationExhausted.
Drawing draw_circular(const RotationGraph& g, const DecompositionPlan& plan,
                      const CircularOptions& opts = {});

}  // namespace lombardi
