#include "lombardi/hyperbolic.hpp"

#include "lombardi/error.hpp"
#include "lombardi/mobius.hpp"

namespace lombardi {

HPoint HPoint::interior(Point p) {
  if (!(p.norm() < 1.0)) throw Error(ErrorCode::PointOutsideWedge, "interior point outside disk");
  return {p, false};
}

HPoint HPoint::at_infinity(Point p) {
  if (p.norm() == 0.0) throw Error(ErrorCode::CoincidentPoints, "ideal point needs a direction");
  return {p / p.norm(), true};
}

double Wedge::opening() const {
  const double o = normalize_angle(second.angle() - first.angle());
  return o == 0.0 ? kTwoPi : o;
}

Point to_origin(Point a, Point z) {
  const Complex ca = to_complex(a);
  const Complex cz = to_complex(z);
  return to_point((cz - ca) / (1.0 - std::conj(ca) * cz));
}

Point from_origin(Point a, Point w) {
  const Complex ca = to_complex(a);
  const Complex cw = to_complex(w);
  return to_point((cw + ca) / (1.0 + std::conj(ca) * cw));
}

Direction direction_toward(const HPoint& from, const HPoint& to) {
  if (from.ideal) throw Error(ErrorCode::CoincidentPoints, "direction from an ideal point");
  const Point w = to_origin(from.location, to.location);
  if (w.norm() == 0.0) throw Error(ErrorCode::CoincidentPoints, "direction to itself");
  return Direction::of(w);
}

HPoint ideal_endpoint(const HPoint& from, Direction dir) {
  return HPoint::at_infinity(from_origin(from.location, dir.unit()));
}

Geodesic geodesic_through(const HPoint& a, const HPoint& b) {
  if (distance(a.location, b.location) <= 1e-14) {
    throw Error(ErrorCode::CoincidentPoints, "geodesic through one point");
  }
  if (!a.ideal) return {arc_from_tangent(a.location, direction_toward(a, b), b.location)};
  if (!b.ideal) return {arc_from_tangent(b.location, direction_toward(b, a), a.location).reversed()};
  // Both ideal: geodesics meet the boundary orthogonally, so the tangent at
  // a is the inward radius.
  return {arc_from_tangent(a.location, Direction::of(Point{} - a.location), b.location)};
}

HPoint point_on_ray(const HPoint& base, const HPoint& ideal_end, double t) {
  if (t <= 0.0) return base;
  if (t >= 1.0) return ideal_end;
  const Geodesic g = geodesic_through(base, ideal_end);
  Point x = g.arc.point_at(t);
  if (x.norm() >= 1.0) x = x * (std::nextafter(1.0, 0.0) / x.norm());
  return {x, false};
}

bool wedge_contains(const Wedge& w, const HPoint& z, double tol) {
  if (distance(w.apex.location, z.location) <= 1e-15) return true;
  const Direction d = direction_toward(w.apex, z);
  const double opening = w.opening();
  double rel = normalize_angle(d.angle() - w.first.angle());
  // Measure the complement symmetrically so a negative tol is strict on both sides.
  if (rel > opening + (kTwoPi - opening) / 2.0) rel -= kTwoPi;
  return rel >= -tol && rel <= opening + tol;
}

double wedge_opening(const HPoint& x, const Wedge& w) {
  if (!wedge_contains(w, x, 1e-9)) {
    throw Error(ErrorCode::PointOutsideWedge, "point is not inside the wedge");
  }
  if (distance(x.location, w.apex.location) <= 1e-15) return w.opening() / 2.0;
  if (x.ideal) return kPi;
  const Direction ray = direction_toward(w.apex, x);
  const HPoint end = ideal_endpoint(w.apex, ray);
  const Direction forward = direction_toward(x, end);
  double best = kPi;
  for (Direction boundary : {w.first, w.second}) {
    const HPoint e = ideal_endpoint(w.apex, boundary);
    best = std::min(best, std::abs(direction_toward(x, e).minus(forward)));
  }
  return best;
}

std::vector<HPoint> equally_spaced_ideal_rays(const HPoint& x, Direction incoming, int d) {
  if (x.ideal) throw Error(ErrorCode::CoincidentPoints, "rays from an ideal point");
  std::vector<HPoint> out;
  const Direction back = incoming.reversed();
  for (int j = 1; j < d; ++j) {
    out.push_back(ideal_endpoint(x, back.rotated(kTwoPi * j / d)));
  }
  return out;
}

}  // namespace lombardi
