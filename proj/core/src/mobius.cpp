#include "lombardi/mobius.hpp"

#include <algorithm>

#include "lombardi/error.hpp"

namespace lombardi {

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (std::abs(a * d - b * c) <= 1e-14 * scale * scale) {
    throw Error(ErrorCode::InfiniteImage, "Mobius map is singular (ad - bc = 0)");
  }
}

MobiusMap MobiusMap::to_standard(Complex z1, Complex z2, Complex z3) {
  // ((z - z1)(z2 - z3)) / ((z - z3)(z2 - z1))
  const Complex k1 = z2 - z3;
  const Complex k2 = z2 - z1;
  return {k1, -z1 * k1, k2, -z3 * k2};
}

MobiusMap MobiusMap::from_three_points(Complex z1, Complex z2, Complex z3, Complex w1,
                                       Complex w2, Complex w3) {
  return to_standard(w1, w2, w3).inverse().compose(to_standard(z1, z2, z3));
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
          c_ * o.b_ + d_ * o.d_};
}

Complex MobiusMap::apply(Complex z) const {
  const Complex num = a_ * z + b_;
  const Complex den = c_ * z + d_;
  if (std::abs(den) <= 1e-14 * std::max(std::abs(num), 1e-300)) {
    throw Error(ErrorCode::InfiniteImage, "point maps to infinity");
  }
  return num / den;
}

GeneralizedCircle MobiusMap::apply(const Circle& c) const {
  return apply(GeneralizedCircle::from_circle(c));
}

GeneralizedCircle MobiusMap::apply(const GeneralizedCircle& g) const {
  // Three points of the source curve avoiding the pole.
  std::vector<Point> samples;
  for (int k = 0; k < 6 && samples.size() < 3; ++k) {
    const double t = 0.37 + 1.1 * k;
    Point x;
    if (g.is_line) {
      x = g.line_point + g.line_dir * (std::tan(t / 2.0) * 4.0);
    } else {
      x = g.circle.center + unit_vector(t) * g.circle.radius;
    }
    try {
      samples.push_back(apply(x));
    } catch (const Error&) {
    }
  }
  if (samples.size() < 3) throw Error(ErrorCode::InfiniteImage, "cannot sample curve image");
  return GeneralizedCircle::through_three(samples[0], samples[1], samples[2]);
}

Arc MobiusMap::apply(const Arc& arc) const {
  if (c_ != Complex(0.0)) {
    const Point pole = to_point(-d_ / c_);
    if (arc_clearance(arc, pole) <= 1e-12 * std::max(1.0, arc.chord_length())) {
      throw Error(ErrorCode::InfiniteImage, "arc passes through the pole");
    }
  }
  return arc_through(apply(arc.p()), apply(arc.point_at(0.5)), apply(arc.q()));
}

Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4) {
  return ((z1 - z3) * (z2 - z4)) / ((z2 - z3) * (z1 - z4));
}

}  // namespace lombardi
