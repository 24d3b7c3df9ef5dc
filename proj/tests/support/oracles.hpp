#pragma once

// Independent reference computations for the tests. Nothing here calls the
// routine it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lombardi/graph.hpp"

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec {
  double x = 0.0;
  double y = 0.0;
};

inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
inline Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
inline double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec a) { return std::hypot(a.x, a.y); }
inline Vec polar(double r, double a) { return {r * std::cos(a), r * std::sin(a)}; }

/// Difference of two angles reduced to (-pi, pi].
inline double angle_gap(double a, double b) {
  double d = std::remainder(a - b, 2.0 * kPi);
  if (d <= -kPi) d += 2.0 * kPi;
  return d;
}

/// Circle through p, tangent there to direction `dir`, passing through r.
/// Absent when r lies on the tangent line (the curve is then a segment).
struct TangentCircle {
  Vec center;
  double radius = 0.0;
  bool ccw = true;  // travel from p along dir turns counterclockwise
};

inline std::optional<TangentCircle> tangent_circle(Vec p, double dir, Vec r) {
  const Vec t = polar(1.0, dir);
  const Vec n{-t.y, t.x};
  const Vec w = r - p;
  const double denom = 2.0 * dot(n, w);
  if (std::abs(denom) < 1e-14 * (1.0 + dot(w, w))) return std::nullopt;
  const double s = dot(w, w) / denom;
  return TangentCircle{p + s * n, std::abs(s), s > 0.0};
}

/// Direction of travel when arriving at r along the arc that leaves p along dir.
inline double arrival_direction(Vec p, double dir, Vec r) {
  const auto c = tangent_circle(p, dir, r);
  if (!c) return dir;
  const Vec radial = r - c->center;
  return c->ccw ? std::atan2(radial.x, -radial.y) : std::atan2(-radial.x, radial.y);
}

/// Direction of travel at p along the circle (or line) through p, m, q,
/// traversed p -> m -> q. Uses the circumcenter directly.
inline double tangent_via_circumcenter(Vec p, Vec m, Vec q) {
  const Vec b = m - p, c = q - p;
  const double d = 2.0 * cross(b, c);
  if (std::abs(d) < 1e-14 * dot(b, b) * norm(c)) return std::atan2(b.y, b.x);
  const Vec center = p + (1.0 / d) * Vec{c.y * dot(b, b) - b.y * dot(c, c), b.x * dot(c, c) - c.x * dot(b, b)};
  const Vec r = p - center;
  const bool ccw = cross(m - p, q - m) > 0.0;
  return ccw ? std::atan2(r.x, -r.y) : std::atan2(-r.x, r.y);
}

/// Largest departure from even spacing of a set of directions.
inline double spacing_deviation(std::vector<double> angles) {
  const int k = static_cast<int>(angles.size());
  if (k < 2) return 0.0;
  for (double& a : angles) a = std::remainder(a, 2.0 * kPi) + kPi;
  std::sort(angles.begin(), angles.end());
  double worst = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = i + 1 < k ? angles[i + 1] - angles[i] : angles[0] + 2.0 * kPi - angles[i];
    worst = std::max(worst, std::abs(gap - 2.0 * kPi / k));
  }
  return worst;
}

// ---- graphs -----------------------------------------------------------------

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }
};

inline SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

/// Every new vertex joins at most two earlier ones, so the degeneracy is at most 2.
inline SimpleGraph random_two_degenerate(int n, std::mt19937_64& rng) {
  SimpleGraph g{n, {}};
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int a = pick(rng);
    g.edges.emplace_back(a, v);
    if (v >= 2 && std::bernoulli_distribution(0.8)(rng)) {
      int b = pick(rng);
      while (b == a) b = pick(rng);
      g.edges.emplace_back(b, v);
    }
  }
  return g;
}

inline lombardi::RotationGraph to_rotation_graph(const SimpleGraph& g) {
  std::vector<lombardi::Edge> edges;
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return lombardi::RotationGraph(g.n, std::move(edges));
}

/// Same graph with every rotation shuffled.
inline lombardi::RotationGraph with_random_rotation(const SimpleGraph& s, std::mt19937_64& rng) {
  lombardi::RotationGraph g = to_rotation_graph(s);
  for (lombardi::VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<lombardi::VertexId> ccw(g.neighbors(v).begin(), g.neighbors(v).end());
    std::shuffle(ccw.begin(), ccw.end(), rng);
    g.set_rotation(v, ccw);
  }
  return g;
}

/// Perfect matching existence by subset dynamic programming (n <= 20).
inline bool has_perfect_matching(const SimpleGraph& g) {
  if (g.n % 2 == 1) return false;
  const auto adj = g.adjacency();
  const std::uint32_t full = (1u << g.n) - 1u;
  std::vector<signed char> memo(std::size_t{1} << g.n, -1);
  auto solve = [&](auto&& self, std::uint32_t used) -> bool {
    if (used == full) return true;
    if (memo[used] >= 0) return memo[used] != 0;
    int v = 0;
    while (used & (1u << v)) ++v;
    bool ok = false;
    for (int w : adj[v]) {
      if (!(used & (1u << w)) && self(self, used | (1u << v) | (1u << w))) {
        ok = true;
        break;
      }
    }
    memo[used] = ok ? 1 : 0;
    return ok;
  };
  return solve(solve, 0u);
}

/// Largest minimum degree over all nonempty induced subgraphs (n <= 16).
inline int degeneracy(const SimpleGraph& g) {
  const auto adj = g.adjacency();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    int low = g.n;
    for (int v = 0; v < g.n; ++v) {
      if (!(mask & (1u << v))) continue;
      int d = 0;
      for (int w : adj[v]) d += (mask >> w) & 1u;
      low = std::min(low, d);
    }
    best = std::max(best, low);
  }
  return best;
}

/// Degree of every vertex within an edge subset, by direct count.
inline std::vector<int> degrees_in(const lombardi::RotationGraph& g, const std::vector<int>& edge_ids) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (int e : edge_ids) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

/// Counterclockwise angle at x from the edge towards `from` to the edge
/// towards `to`, read off the rotation.
inline double rotation_angle(const lombardi::RotationGraph& g, int x, int from, int to) {
  const auto& r = g.rotation(x);
  const int d = static_cast<int>(r.size());
  const int i = static_cast<int>(std::find(r.begin(), r.end(), from) - r.begin());
  const int j = static_cast<int>(std::find(r.begin(), r.end(), to) - r.begin());
  return 2.0 * kPi * (((j - i) % d + d) % d) / d;
}

/// Angle mod pi between arc pq and the circumcircle of the drawn triangle
/// p -> q -> v. Arcs through two points of a circle meet it at mirrored
/// angles at the two points, so the three corner angles fix all three arc
/// angles up to a common shift by pi.
inline double arc_to_circumcircle(const lombardi::RotationGraph& g, int p, int q, int v) {
  const double bp = rotation_angle(g, p, v, q);
  const double bq = rotation_angle(g, q, p, v);
  const double bv = rotation_angle(g, v, q, p);
  const double s = (bp + bq + bv + 3.0 * kPi) / 2.0;
  return std::remainder(s - bv - kPi, kPi);
}

struct SmoothTriangleBlock {
  int a = -1, b = -1, c = -1;  // triangle with opposite edges at every corner
  int blocked = -1;            // vertex whose locus is the triangle's circle
};

/// Rotation-only proof that no Lombardi drawing exists. A triangle whose
/// corners all see the other two at opposite slots must be one whole circle.
/// A vertex adjacent to two of its corners whose own triangle with them has
/// that same circle as circumcircle then has to sit on one of its arcs.
inline std::optional<SmoothTriangleBlock> smooth_triangle_block(const lombardi::RotationGraph& g) {
  const int n = g.vertex_count();
  const auto straight = [&](int x, int y, int z) { return std::abs(rotation_angle(g, x, y, z) - kPi) < 1e-12; };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) continue;
        if (!straight(a, b, c) || !straight(b, a, c) || !straight(c, a, b)) continue;
        const int corner[3] = {a, b, c};
        for (int v = 0; v < n; ++v) {
          if (v == a || v == b || v == c) continue;
          for (int i = 0; i < 3; ++i) {
            const int p = corner[i], q = corner[(i + 1) % 3];
            if (g.has_edge(v, p) && g.has_edge(v, q) && std::abs(arc_to_circumcircle(g, p, q, v)) < 1e-12) {
              return SmoothTriangleBlock{a, b, c, v};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---- hyperbolic -------------------------------------------------------------

/// Wedge opening seen from a point at Euclidean distance s from the parent
/// (at the origin) along the bisector of a wedge of half-angle beta bounded
/// by diameters: angle between the forward ray and a boundary ideal point.
inline double opening_along_bisector(double s, double beta) {
  return 2.0 * std::atan2(std::sin(beta), std::cos(beta) - s) - beta;
}

/// Inverse of opening_along_bisector.
inline double distance_for_opening(double theta, double beta) {
  return std::cos(beta) - std::sin(beta) / std::tan((theta + beta) / 2.0);
}

// ---- svg --------------------------------------------------------------------

/// Endpoint form of an SVG elliptical arc with equal radii, converted to a
/// center and signed sweep (SVG implementation notes, circular case).
struct SvgArc {
  Vec from;
  Vec to;
  double radius = 0.0;
  bool large = false;
  bool sweep = false;

  Vec center() const {
    const Vec mid = 0.5 * (from + to);
    const Vec half = 0.5 * (to - from);
    const double h2 = std::max(0.0, radius * radius - dot(half, half));
    const double k = std::sqrt(h2) / std::max(norm(half), 1e-300);
    const Vec perp{-half.y, half.x};
    const double sign = (large != sweep) ? 1.0 : -1.0;
    return mid + (sign * k) * perp;
  }

  /// Points along the drawn arc (sweep = 1 is increasing angle in y-down space).
  std::vector<Vec> samples(int count) const {
    const Vec c = center();
    const double a0 = std::atan2(from.y - c.y, from.x - c.x);
    const double a1 = std::atan2(to.y - c.y, to.x - c.x);
    double delta = a1 - a0;
    if (sweep && delta < 0.0) delta += 2.0 * kPi;
    if (!sweep && delta > 0.0) delta -= 2.0 * kPi;
    std::vector<Vec> out;
    for (int i = 0; i <= count; ++i) out.push_back(c + polar(radius, a0 + delta * i / count));
    return out;
  }
};

/// Parses "M x y A r r 0 large sweep x y"; absent for other path shapes.
inline std::optional<SvgArc> parse_svg_arc(const std::string& d) {
  std::istringstream in(d);
  std::string m, a;
  SvgArc arc;
  double ry = 0.0, rotation = 0.0;
  int large = 0, sweep = 0;
  if (!(in >> m >> arc.from.x >> arc.from.y >> a) || m != "M" || a != "A") return std::nullopt;
  if (!(in >> arc.radius >> ry >> rotation >> large >> sweep >> arc.to.x >> arc.to.y)) return std::nullopt;
  arc.large = large != 0;
  arc.sweep = sweep != 0;
  return arc;
}

}  // namespace oracle
