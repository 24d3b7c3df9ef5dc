#pragma once

#include <complex>

#include "lombardi/geometry.hpp"

namespace lombardi {

using Complex = std::complex<double>;

inline Complex to_complex(Point p) { return {p.x, p.y}; }
inline Point to_point(Complex z) { return {z.real(), z.imag()}; }

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
class MobiusMap {
 public:
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// Sends z1, z2, z3 to 0, 1 and infinity.
  static MobiusMap to_standard(Complex z1, Complex z2, Complex z3);
  /// Sends each z_i to w_i.
  static MobiusMap from_three_points(Complex z1, Complex z2, Complex z3,
                                     Complex w1, Complex w2, Complex w3);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }
  /// (this o other)(z) = this(other(z)).
  MobiusMap compose(const MobiusMap& other) const;

  /// Throws InfiniteImage when x is (numerically) the pole.
  Complex apply(Complex z) const;
  Point apply(Point x) const { return to_point(apply(to_complex(x))); }
  GeneralizedCircle apply(const Circle& c) const;
  GeneralizedCircle apply(const GeneralizedCircle& g) const;
  /// Throws InfiniteImage when the pole lies on the arc.
  Arc apply(const Arc& arc) const;

 private:
  Complex a_, b_, c_, d_;
};

/// Cross-ratio (z1, z2; z3, z4).
Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4);

}  // namespace lombardi
