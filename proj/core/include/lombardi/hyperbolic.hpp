#pragma once

// Poincare-disk primitives. Geodesics are arcs orthogonal to the unit circle;
// because the model is conformal, Euclidean tangent angles are hyperbolic
// angles.

#include <vector>

#include "lombardi/geometry.hpp"

namespace lombardi {

struct HPoint {
  Point location;
  bool ideal = false;

  static HPoint interior(Point p);
  /// Renormalizes onto the unit circle.
  static HPoint at_infinity(Point p);
  static HPoint at_infinity(Direction d) { return {d.unit(), true}; }
};

struct Geodesic {
  Arc arc;  // from the first to the second point
};

struct Wedge {
  HPoint apex;
  Direction first;   // boundary ray directions at the apex; the wedge runs
  Direction second;  // counterclockwise from first to second

  double opening() const;
  Direction bisector() const { return first.rotated(opening() / 2.0); }
};

/// Disk automorphism sending a to the origin, z -> (z - a) / (1 - conj(a) z).
Point to_origin(Point a, Point z);
/// Inverse of to_origin.
Point from_origin(Point a, Point w);

/// Direction at `from` (interior) of the geodesic towards `to`.
Direction direction_toward(const HPoint& from, const HPoint& to);
/// Ideal endpoint of the geodesic ray leaving `from` (interior) along `dir`.
HPoint ideal_endpoint(const HPoint& from, Direction dir);

Geodesic geodesic_through(const HPoint& a, const HPoint& b);

/// Point at chord-parameter t in (0, 1) on the geodesic ray from base to the
/// ideal point; the parameter is the fraction of the arc's central angle
/// (Euclidean length fraction along diameters).
HPoint point_on_ray(const HPoint& base, const HPoint& ideal_end, double t);

/// Angular membership at the apex; a negative tol makes the test strict.
bool wedge_contains(const Wedge& w, const HPoint& z, double tol = 1e-12);

/// Largest angle, measured from the forward direction of the apex->x ray, of
/// a geodesic ray from x that stays within the wedge. Equals half the opening
/// at the apex and tends to pi at the ideal end.
double wedge_opening(const HPoint& x, const Wedge& w);

/// Ideal endpoints of d-1 rays from x which, together with the reversed
/// incoming direction, are spaced exactly 2pi/d. Returned counterclockwise,
/// starting after the reversed incoming direction.
std::vector<HPoint> equally_spaced_ideal_rays(const HPoint& x, Direction incoming, int d);

}  // namespace lombardi
