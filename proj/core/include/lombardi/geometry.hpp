#pragma once

// Euclidean kernel: points, directions, circles and circular arcs encoded by
// endpoints plus a signed bulge.

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace lombardi {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite angle into [0, 2pi).
double normalize_angle(double radians);
/// Maps any finite angle into (-pi, pi].
double wrap_signed(double radians);

struct Tolerances {
  double position = 1e-9;  // drawing units
  double angle = 1e-10;    // radians
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point a, Point b) = default;

  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
  double angle() const { return std::atan2(y, x); }
  /// Counterclockwise perpendicular.
  Point perp() const { return {-y, x}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point a, Point b) { return (a - b).norm(); }
inline Point unit_vector(double radians) {
  return {std::cos(radians), std::sin(radians)};
}

/// An angle normalized to [0, 2pi).
class Direction {
 public:
  Direction() = default;
  explicit Direction(double radians) : angle_(normalize_angle(radians)) {}
  static Direction of(Point v) { return Direction(v.angle()); }

  double angle() const { return angle_; }
  Point unit() const { return unit_vector(angle_); }
  Direction rotated(double radians) const { return Direction(angle_ + radians); }
  Direction reversed() const { return Direction(angle_ + kPi); }

  /// Signed rotation in (-pi, pi] taking `from` onto this direction.
  double minus(Direction from) const { return wrap_signed(angle_ - from.angle_); }

 private:
  double angle_ = 0.0;
};

struct Circle {
  Point center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point c, double r);

  bool contains(Point x, double tol) const {
    return std::abs(distance(center, x) - radius) <= tol;
  }
};

/// A circle or a straight line; Mobius maps and degenerate loci produce both.
struct GeneralizedCircle {
  bool is_line = false;
  Circle circle;      // valid when !is_line
  Point line_point;   // valid when is_line
  Point line_dir;     // unit vector, valid when is_line

  static GeneralizedCircle from_circle(Circle c) { return {false, c, {}, {}}; }
  static GeneralizedCircle line_through(Point a, Point b);
  static GeneralizedCircle through_three(Point a, Point b, Point c);

  double distance_to(Point x) const;
};

/// Circular arc or segment from p to q. The bulge is tan(central_angle / 4)
/// with positive values turning counterclockwise; zero is a segment.
class Arc {
 public:
  Arc() = default;
  Arc(Point p, Point q, double bulge);
  static Arc segment(Point p, Point q) { return Arc(p, q, 0.0); }

  Point p() const { return p_; }
  Point q() const { return q_; }
  double bulge() const { return bulge_; }

  /// Half of the signed central angle, in (-pi, pi).
  double half_angle() const { return 2.0 * std::atan(bulge_); }
  double central_angle() const { return 2.0 * half_angle(); }
  double chord_length() const { return distance(p_, q_); }
  double chord_angle() const { return (q_ - p_).angle(); }
  bool is_segment(double angle_tol = 1e-12) const {
    return std::abs(half_angle()) <= angle_tol;
  }

  /// Supporting circle; absent for segments.
  std::optional<Circle> circle() const;
  GeneralizedCircle support() const;

  /// Point at fraction s of the central angle (segments: fraction of length).
  Point point_at(double s) const;
  /// Direction of travel (p towards q) at fraction s.
  Direction travel_direction_at(double s) const;
  /// Fraction along the arc of a point lying on the supporting curve.
  double parameter_of(Point x) const;

  Arc reversed() const { return Arc(q_, p_, -bulge_); }
  double length() const;

 private:
  Point p_;
  Point q_;
  double bulge_ = 0.0;
};

/// The unique arc or segment leaving p with tangent dir and ending at q.
/// Throws DegenerateArc for the collinear-ray configuration (dir points
/// straight away from q) and CoincidentPoints when p == q.
Arc arc_from_tangent(Point p, Direction dir, Point q, const Tolerances& tol = {});

/// Tangent directions pointing into the arc from p and from q.
std::pair<Direction, Direction> endpoint_tangents(const Arc& a);

enum class Side { inside, outside };

/// Arc joining p and q (both on o) that meets o at angle theta in [0, pi].
/// theta is measured at p from the counterclockwise tangent of o, rotating
/// towards the requested side; theta = 0 is the counterclockwise arc of o
/// from p to q, theta = pi the clockwise one.
Arc circle_through_chord_angle(const Circle& o, Point p, Point q, double theta, Side side,
                               const Tolerances& tol = {});

/// Unsigned angles in [0, pi] that the arc makes with o at p (measured from
/// o's counterclockwise tangent) and at q (measured from o's clockwise
/// tangent). Equal for any arc with both endpoints on o.
std::pair<double, double> angles_to_circle(const Arc& a, const Circle& o);

/// Angle in [0, pi/2] between the tangent lines of the arc and of o at an
/// endpoint of the arc lying on o.
double line_angle_to_circle(const Arc& a, const Circle& o, bool at_p);

struct LocusInputs {
  Point p;
  Point q;
  Direction dir_p;  // tangent of the arc leaving p
  Direction dir_q;  // tangent of the arc leaving q
  /// Signed meeting angle at the meeting point r, measured counterclockwise
  /// from the tangent pointing back along the p-arc to the one pointing back
  /// along the q-arc. Must not be a multiple of 2pi.
  double theta_pq = kPi / 2;

  /// Angle of dir_p above the chord p->q (counterclockwise positive).
  double theta_ph() const;
  /// Angle of dir_q above the chord q->p (clockwise positive).
  double theta_qh() const;
};

enum class LocusOrientation { ccw, cw };

/// Inscribed half-angle alpha (mod pi) characterizing the locus: every
/// meeting point r satisfies arg((r - q) / (r - p)) = alpha (mod pi).
double locus_inscribed_angle(const LocusInputs& in, LocusOrientation o = LocusOrientation::ccw);

/// The circle through p and q on which the tangent-constrained arc pairs
/// meet at the requested angle. With LocusOrientation::cw the meeting angle
/// is read clockwise, which yields the mirror-image circle. Throws
/// DegenerateLocus when the locus is the line pq.
Circle meeting_locus(const LocusInputs& in, LocusOrientation o = LocusOrientation::ccw,
                     const Tolerances& tol = {});

/// Same as meeting_locus but returns the line pq instead of throwing.
GeneralizedCircle meeting_locus_general(const LocusInputs& in,
                                        LocusOrientation o = LocusOrientation::ccw,
                                        const Tolerances& tol = {});

/// Signed meeting angle at the common endpoint r of two arcs a (p->r) and
/// b (q->r), with the same convention as LocusInputs::theta_pq.
double meeting_angle(const Arc& from_p, const Arc& from_q);

/// Intersection points of two circles; tangency yields a single point.
/// Throws IdenticalCircles.
std::vector<Point> intersect_circles(const Circle& a, const Circle& b);
std::vector<Point> intersect_general(const GeneralizedCircle& a, const GeneralizedCircle& b);

/// Minimum distance from x to the point set of the arc.
double arc_clearance(const Arc& a, Point x);

struct ArcIntersection {
  Point point;
  bool grazing = false;  // supporting curves (near-)tangent here
};

/// Crossings between two arcs, excluding endpoints the arcs share.
std::vector<ArcIntersection> intersect_arcs(const Arc& a, const Arc& b, const Tolerances& tol = {});

/// Arc through three points in the order a, m, b (m strictly between).
Arc arc_through(Point a, Point m, Point b);

}  // namespace lombardi
