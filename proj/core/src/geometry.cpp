#include "lombardi/geometry.hpp"

#include <algorithm>
#include <limits>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

// Below this half-angle an arc is parameterized through its chord.
constexpr double kFlatHalfAngle = 1e-6;

Point chord_unit(Point p, Point q) { return (q - p) / distance(p, q); }

// Vector from the arc's center to p, computed without forming the center so
// that nearly flat arcs keep full relative precision.
Point center_to_p(Point p, Point q, double h) {
  const double len = distance(p, q);
  const Point n = chord_unit(p, q).perp();
  const Point p_to_center = (q - p) / 2.0 + n * (len / 2.0 * std::cos(h) / std::sin(h));
  return Point{} - p_to_center;
}

double angle_between(Point a, Point b) { return std::atan2(cross(a, b), dot(a, b)); }

}  // namespace

double normalize_angle(double radians) {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double wrap_signed(double radians) {
  double a = normalize_angle(radians);
  if (a > kPi) a -= kTwoPi;
  return a;
}

Circle::Circle(Point c, double r) : center(c), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(c.x) || !std::isfinite(c.y)) {
    throw Error(ErrorCode::DegenerateArc, "circle radius must be positive and finite");
  }
}

GeneralizedCircle GeneralizedCircle::line_through(Point a, Point b) {
  GeneralizedCircle g;
  g.is_line = true;
  g.line_point = a;
  g.line_dir = chord_unit(a, b);
  return g;
}

GeneralizedCircle GeneralizedCircle::through_three(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double den = 2.0 * cross(ab, ac);
  const double scale = std::max({ab.norm2(), ac.norm2(), 1e-300});
  if (std::abs(den) <= 1e-14 * scale) {
    return ab.norm2() >= ac.norm2() ? line_through(a, b) : line_through(a, c);
  }
  const Point off{(ac.y * ab.norm2() - ab.y * ac.norm2()) / den,
                  (ab.x * ac.norm2() - ac.x * ab.norm2()) / den};
  return from_circle(Circle(a + off, off.norm()));
}

double GeneralizedCircle::distance_to(Point x) const {
  if (is_line) return std::abs(cross(x - line_point, line_dir));
  return std::abs(distance(x, circle.center) - circle.radius);
}

Arc::Arc(Point p, Point q, double bulge) : p_(p), q_(q), bulge_(bulge) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "arc endpoints coincide");
  if (!std::isfinite(bulge)) {
    throw Error(ErrorCode::DegenerateArc, "collinear-ray configuration has no finite bulge");
  }
}

std::optional<Circle> Arc::circle() const {
  const double h = half_angle();
  if (is_segment()) return std::nullopt;
  const Point cp = center_to_p(p_, q_, h);
  return Circle(p_ - cp, chord_length() / (2.0 * std::abs(std::sin(h))));
}

GeneralizedCircle Arc::support() const {
  if (auto c = circle()) return GeneralizedCircle::from_circle(*c);
  return GeneralizedCircle::line_through(p_, q_);
}

Point Arc::point_at(double s) const {
  const double h = half_angle();
  const double ratio = std::abs(h) < 1e-12 ? s : std::sin(s * h) / std::sin(h);
  const double dir = chord_angle() - h + s * h;
  return p_ + unit_vector(dir) * (chord_length() * ratio);
}

Direction Arc::travel_direction_at(double s) const {
  const double h = half_angle();
  return Direction(chord_angle() - h + 2.0 * s * h);
}

double Arc::parameter_of(Point x) const {
  const double h = half_angle();
  const double len = chord_length();
  if (std::abs(h) < kFlatHalfAngle) {
    return dot(x - p_, q_ - p_) / (len * len);
  }
  const Point cp = center_to_p(p_, q_, h);   // center -> p
  const Point cx = (x - p_) + cp;            // center -> x
  const double theta = 2.0 * h;
  double rel = angle_between(cp, cx);
  if (theta > 0.0 && rel < 0.0) rel += kTwoPi;
  if (theta < 0.0 && rel > 0.0) rel -= kTwoPi;
  double s = rel / theta;
  if (s > 1.0) {
    // Also consider the equivalent negative parameter and keep the one
    // nearer to [0, 1].
    const double s_neg = s - kTwoPi / std::abs(theta);
    if (-s_neg < s - 1.0) s = s_neg;
  }
  return s;
}

double Arc::length() const {
  const double h = half_angle();
  if (std::abs(h) < 1e-12) return chord_length();
  return chord_length() * std::abs(h) / std::abs(std::sin(h));
}

Arc arc_from_tangent(Point p, Direction dir, Point q, const Tolerances& tol) {
  const double len = distance(p, q);
  if (len <= tol.position) {
    throw Error(ErrorCode::CoincidentPoints, "arc_from_tangent: endpoints coincide");
  }
  const double h = wrap_signed((q - p).angle() - dir.angle());
  if (kPi - std::abs(h) <= tol.angle) {
    throw Error(ErrorCode::DegenerateArc,
                "tangent points directly away from the target (collinear rays)");
  }
  return Arc(p, q, std::tan(h / 2.0));
}

std::pair<Direction, Direction> endpoint_tangents(const Arc& a) {
  const double h = a.half_angle();
  const double phi = a.chord_angle();
  return {Direction(phi - h), Direction(phi + h + kPi)};
}

Arc circle_through_chord_angle(const Circle& o, Point p, Point q, double theta, Side side,
                               const Tolerances& tol) {
  const double on_tol = tol.position * std::max(1.0, o.radius);
  if (!o.contains(p, on_tol) || !o.contains(q, on_tol)) {
    throw Error(ErrorCode::CoincidentPoints, "circle_through_chord_angle: endpoint not on circle");
  }
  if (theta < -tol.angle || theta > kPi + tol.angle) {
    throw Error(ErrorCode::DegenerateArc, "angle to circle must lie in [0, pi]");
  }
  const double ccw_tangent = (p - o.center).angle() + kPi / 2.0;
  const double sign = side == Side::inside ? 1.0 : -1.0;
  return arc_from_tangent(p, Direction(ccw_tangent + sign * theta), q, tol);
}

std::pair<double, double> angles_to_circle(const Arc& a, const Circle& o) {
  const auto [tp, tq] = endpoint_tangents(a);
  const Direction ccw_p((a.p() - o.center).angle() + kPi / 2.0);
  const Direction cw_q((a.q() - o.center).angle() - kPi / 2.0);
  return {std::abs(tp.minus(ccw_p)), std::abs(tq.minus(cw_q))};
}

double line_angle_to_circle(const Arc& a, const Circle& o, bool at_p) {
  const auto [ap, aq] = angles_to_circle(a, o);
  const double v = at_p ? ap : aq;
  return std::min(v, kPi - v);
}

double LocusInputs::theta_ph() const { return wrap_signed(dir_p.angle() - (q - p).angle()); }

double LocusInputs::theta_qh() const { return wrap_signed((p - q).angle() - dir_q.angle()); }

double locus_inscribed_angle(const LocusInputs& in, LocusOrientation o) {
  const double theta = o == LocusOrientation::ccw ? in.theta_pq : -in.theta_pq;
  // A meeting point r satisfies 2 arg((r-q)/(r-p)) = theta + dir_q - dir_p.
  const double twice = normalize_angle(theta + in.dir_q.angle() - in.dir_p.angle());
  return twice / 2.0;
}

GeneralizedCircle meeting_locus_general(const LocusInputs& in, LocusOrientation o,
                                        const Tolerances& tol) {
  if (distance(in.p, in.q) <= tol.position) {
    throw Error(ErrorCode::CoincidentPoints, "meeting_locus: p and q coincide");
  }
  const double alpha = locus_inscribed_angle(in, o);
  const double s = std::sin(alpha);
  if (std::abs(s) <= tol.angle) return GeneralizedCircle::line_through(in.p, in.q);
  const double len = distance(in.p, in.q);
  const Point mid = (in.p + in.q) / 2.0;
  const Point n = chord_unit(in.p, in.q).perp();
  return GeneralizedCircle::from_circle(
      Circle(mid + n * (len / 2.0 * std::cos(alpha) / s), len / (2.0 * std::abs(s))));
}

Circle meeting_locus(const LocusInputs& in, LocusOrientation o, const Tolerances& tol) {
  const auto g = meeting_locus_general(in, o, tol);
  if (g.is_line) {
    throw Error(ErrorCode::DegenerateLocus, "meeting locus degenerates to the line pq");
  }
  return g.circle;
}

double meeting_angle(const Arc& from_p, const Arc& from_q) {
  const Direction back_p = endpoint_tangents(from_p).second;
  const Direction back_q = endpoint_tangents(from_q).second;
  return normalize_angle(back_q.angle() - back_p.angle());
}

std::vector<Point> intersect_circles(const Circle& a, const Circle& b) {
  const Point delta = b.center - a.center;
  const double d = delta.norm();
  const double scale = std::max({a.radius, b.radius, d});
  const double eps = 1e-12 * scale;
  if (d <= eps && std::abs(a.radius - b.radius) <= eps) {
    throw Error(ErrorCode::IdenticalCircles, "circles coincide");
  }
  if (d <= eps) return {};
  const Point u = delta / d;
  if (std::abs(d - (a.radius + b.radius)) <= eps) return {a.center + u * a.radius};
  if (std::abs(d - std::abs(a.radius - b.radius)) <= eps) {
    const double sgn = a.radius >= b.radius ? 1.0 : -1.0;
    return {a.center + u * (sgn * a.radius)};
  }
  if (d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) return {};
  const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h2 = a.radius * a.radius - along * along;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Point base = a.center + u * along;
  if (h == 0.0) return {base};
  return {base + u.perp() * h, base - u.perp() * h};
}

namespace {

std::vector<Point> intersect_line_circle(const GeneralizedCircle& line, const Circle& c) {
  const Point to_c = c.center - line.line_point;
  const double along = dot(to_c, line.line_dir);
  const Point foot = line.line_point + line.line_dir * along;
  const double off = distance(foot, c.center);
  const double eps = 1e-12 * std::max(c.radius, off);
  if (std::abs(off - c.radius) <= eps) return {foot};
  if (off > c.radius) return {};
  const double h = std::sqrt(c.radius * c.radius - off * off);
  return {foot + line.line_dir * h, foot - line.line_dir * h};
}

std::vector<Point> intersect_lines(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  const double den = cross(a.line_dir, b.line_dir);
  if (std::abs(den) <= 1e-15) {
    if (std::abs(cross(b.line_point - a.line_point, a.line_dir)) <= 1e-12) {
      throw Error(ErrorCode::IdenticalCircles, "lines coincide");
    }
    return {};
  }
  const double t = cross(b.line_point - a.line_point, b.line_dir) / den;
  return {a.line_point + a.line_dir * t};
}

bool same_support(const GeneralizedCircle& a, const GeneralizedCircle& b, double eps) {
  if (a.is_line != b.is_line) return false;
  if (a.is_line) {
    return std::abs(cross(a.line_dir, b.line_dir)) <= 1e-12 &&
           std::abs(cross(b.line_point - a.line_point, a.line_dir)) <= eps;
  }
  return distance(a.circle.center, b.circle.center) <= eps &&
         std::abs(a.circle.radius - b.circle.radius) <= eps;
}

Direction curve_tangent(const GeneralizedCircle& g, Point x) {
  if (g.is_line) return Direction::of(g.line_dir);
  return Direction::of((x - g.circle.center).perp());
}

}  // namespace

std::vector<Point> intersect_general(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (!a.is_line && !b.is_line) return intersect_circles(a.circle, b.circle);
  if (a.is_line && b.is_line) return intersect_lines(a, b);
  return a.is_line ? intersect_line_circle(a, b.circle) : intersect_line_circle(b, a.circle);
}

double arc_clearance(const Arc& a, Point x) {
  const double h = a.half_angle();
  const double to_ends = std::min(distance(x, a.p()), distance(x, a.q()));
  if (std::abs(h) < 1e-12) {
    const Point d = a.q() - a.p();
    const double t = std::clamp(dot(x - a.p(), d) / d.norm2(), 0.0, 1.0);
    return distance(x, a.p() + d * t);
  }
  const Point cp = center_to_p(a.p(), a.q(), h);
  const Point px = x - a.p();
  const Point cx = px + cp;
  const double radius = cp.norm();
  const double cx_len = cx.norm();
  if (cx_len == 0.0) return radius;
  const double theta = 2.0 * h;
  double rel = angle_between(cp, cx);
  if (theta > 0.0 && rel < 0.0) rel += kTwoPi;
  if (theta < 0.0 && rel > 0.0) rel -= kTwoPi;
  if (std::abs(rel) > std::abs(theta)) return to_ends;
  // |cx|^2 - R^2 expanded around p, stable for huge radii.
  const double power = px.norm2() + 2.0 * dot(px, cp);
  return std::min(to_ends, std::abs(power) / (cx_len + radius));
}

std::vector<ArcIntersection> intersect_arcs(const Arc& a, const Arc& b, const Tolerances& tol) {
  const double eps = tol.position;
  const auto near = [eps](Point u, Point v) { return distance(u, v) <= eps; };
  std::vector<Point> shared;
  for (Point e : {a.p(), a.q()}) {
    if (near(e, b.p()) || near(e, b.q())) shared.push_back(e);
  }
  const auto is_shared = [&](Point x) {
    return std::any_of(shared.begin(), shared.end(), [&](Point s) { return near(s, x); });
  };
  const auto within = [eps](const Arc& arc, Point x) {
    const double s = arc.parameter_of(x);
    const double slack = eps / std::max(arc.length(), 1e-300);
    return s >= -slack && s <= 1.0 + slack;
  };

  const GeneralizedCircle sa = a.support();
  const GeneralizedCircle sb = b.support();
  std::vector<ArcIntersection> out;

  if (same_support(sa, sb, eps)) {
    // Overlapping pieces of one curve: report endpoints strictly inside the
    // other arc.
    for (const auto& [inner, outer] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
      for (Point e : {inner->p(), inner->q()}) {
        if (is_shared(e)) continue;
        const double s = outer->parameter_of(e);
        if (s > 0.0 && s < 1.0) out.push_back({e, false});
      }
    }
    return out;
  }

  std::vector<Point> candidates;
  try {
    candidates = intersect_general(sa, sb);
  } catch (const Error&) {
    return out;
  }
  const bool tangent_pair = candidates.size() == 1 && !(sa.is_line && sb.is_line);
  for (Point x : candidates) {
    if (is_shared(x)) continue;
    if (!within(a, x) || !within(b, x)) continue;
    const double cross_angle =
        std::abs(std::sin(curve_tangent(sa, x).angle() - curve_tangent(sb, x).angle()));
    out.push_back({x, tangent_pair || cross_angle <= 1e-9});
  }
  return out;
}

Arc arc_through(Point a, Point m, Point b) {
  const double seen = angle_between(a - m, b - m);
  const double h = wrap_signed(seen - kPi);
  return Arc(a, b, std::tan(h / 2.0));
}

}  // namespace lombardi
