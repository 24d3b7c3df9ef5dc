#include "lombardi/spirograph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

int wrap_index(int k, int n) { return ((k % n) + n) % n; }

struct Neighbor {
  int circle;
  int k;
};

const OrbitEndpoint& near_end(const EdgeOrbit& o, bool at_from) { return at_from ? o.from : o.to; }
const OrbitEndpoint& far_end(const EdgeOrbit& o, bool at_from) { return at_from ? o.to : o.from; }

Neighbor across(const SpiroSpec& spec, OrbitRef ref, int k) {
  const EdgeOrbit& o = spec.orbits[ref.orbit];
  const int j = k - near_end(o, ref.at_from).offset;
  const OrbitEndpoint& far = far_end(o, ref.at_from);
  return {far.circle, wrap_index(j + far.offset, spec.symmetry)};
}

int slot_of(const SpiroSpec& spec, int circle, OrbitRef ref) {
  const auto& ord = spec.order[circle];
  const auto it = std::find(ord.begin(), ord.end(), ref);
  return it == ord.end() ? -1 : static_cast<int>(it - ord.begin());
}

double angle_of(const SpiroSpec& spec, int circle, int k) {
  const double step = kTwoPi / spec.symmetry;
  return step * k + (spec.circles[circle].half_step ? step / 2.0 : 0.0);
}

int degree_of(const SpiroSpec& spec, int circle) {
  return static_cast<int>(spec.order[circle].size());
}

Point position(const SpiroSpec& spec, const CircleSolution& s, int circle, int k) {
  return s.radius * unit_vector(angle_of(spec, circle, k));
}

Direction slot_direction(const SpiroSpec& spec, const CircleSolution& s, int circle, int k,
                         int slot) {
  return Direction(angle_of(spec, circle, k) + s.twist + kTwoPi * slot / degree_of(spec, circle));
}

// One angular condition on the twist t of a circle, given its radius r.
struct Constraint {
  enum class Kind { inward, chord, diameter } kind;
  // inward: arrival direction at (c, 0) minus its slot, as a function of r
  std::function<double(double)> arrival;
  // chord / diameter: slot offsets of the two ends
  int first_slot = 0;
  int second_slot = 0;

  double residual(double t, double r, int degree) const {
    switch (kind) {
      case Kind::inward:
        return wrap_signed(arrival(r) - t);
      case Kind::chord:
        return wrap_signed(2.0 * t + kTwoPi * (first_slot + second_slot) / degree);
      case Kind::diameter:
        return wrap_signed(t + kTwoPi * first_slot / degree - kPi);
    }
    return 0.0;
  }
};

std::vector<Constraint> constraints_of(const SpiroSpec& spec, int circle,
                                       const std::vector<CircleSolution>& inner) {
  std::vector<Constraint> out;
  const int deg = degree_of(spec, circle);
  const double psi_b = angle_of(spec, circle, 0);
  std::vector<Constraint> same;
  for (int slot = 0; slot < deg; ++slot) {
    const OrbitRef ref = spec.order[circle][slot];
    const Neighbor nb = across(spec, ref, 0);
    if (nb.circle < circle) {
      const CircleSolution& sa = inner[nb.circle];
      const int slot_a = slot_of(spec, nb.circle, {ref.orbit, !ref.at_from});
      const Point a = position(spec, sa, nb.circle, nb.k);
      const double d_a = slot_direction(spec, sa, nb.circle, nb.k, slot_a).angle();
      const double slot_offset = kTwoPi * slot / deg;
      Constraint c{Constraint::Kind::inward, {}, slot, 0};
      c.arrival = [=](double r) {
        const Point b = r * unit_vector(psi_b);
        return 2.0 * (b - a).angle() - d_a + kPi - psi_b - slot_offset;
      };
      out.push_back(std::move(c));
    } else if (nb.circle == circle) {
      if (spec.is_half_orbit(ref.orbit)) {
        same.push_back({Constraint::Kind::diameter, {}, slot, slot});
      } else if (ref.at_from) {
        same.push_back({Constraint::Kind::chord, {}, slot, slot_of(spec, circle, {ref.orbit, false})});
      }
    }
  }
  out.insert(out.end(), same.begin(), same.end());
  return out;
}

Arc edge_arc(const SpiroSpec& spec, const std::vector<CircleSolution>& sols, const RotationGraph& g,
             EdgeId e) {
  const int n = spec.symmetry;
  const Edge& ed = g.edge(e);
  // Start from the end on the smaller circle; ties keep the listed order.
  const bool flip = ed.v / n < ed.u / n;
  const VertexId s = flip ? ed.v : ed.u;
  const VertexId t = flip ? ed.u : ed.v;
  const int cs = s / n, ks = s % n, ct = t / n, kt = t % n;
  const Point ps = position(spec, sols[cs], cs, ks);
  const Point pt = position(spec, sols[ct], ct, kt);
  const Arc arc = arc_from_tangent(ps, slot_direction(spec, sols[cs], cs, ks, g.rotation_index(s, t)), pt);
  return flip ? arc.reversed() : arc;
}

// Arcs of all edges between solved circles keep clear of all solved vertices.
bool is_clear(const SpiroSpec& spec, const SpiroGraph& sg, const std::vector<CircleSolution>& sols,
              double clearance) {
  const int n = spec.symmetry;
  const int solved = static_cast<int>(sols.size());
  const int top = solved - 1;
  const RotationGraph& g = sg.graph;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u / n >= solved || ed.v / n >= solved) continue;
    const bool new_edge = ed.u / n == top || ed.v / n == top;
    Arc arc;
    try {
      arc = edge_arc(spec, sols, g, e);
    } catch (const Error&) {
      return false;
    }
    for (VertexId w = 0; w < solved * n; ++w) {
      if (w == ed.u || w == ed.v) continue;
      if (!new_edge && w / n != top) continue;
      if (arc_clearance(arc, position(spec, sols[w / n], w / n, w % n)) < clearance) return false;
    }
  }
  return true;
}

std::vector<double> radius_samples(double lo, const SpiroOptions& opt) {
  std::vector<double> rs(opt.samples);
  for (int i = 0; i < opt.samples; ++i) {
    rs[i] = lo * std::pow(opt.bracket, (i + 0.5) / opt.samples);
  }
  return rs;
}

// Sign changes of a wrapped residual, ignoring jumps across +-pi.
std::vector<int> sign_change_intervals(const std::vector<double>& values) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double a = values[i], b = values[i + 1];
    if ((a < 0.0) != (b < 0.0) && std::abs(a - b) < kPi) out.push_back(static_cast<int>(i));
  }
  return out;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double total_chord_turn(const SpiroSpec& spec, int circle, double t, double r) {
  const int deg = degree_of(spec, circle);
  double turn = 0.0;
  CircleSolution s;
  s.radius = r;
  s.twist = t;
  for (int slot = 0; slot < deg; ++slot) {
    const OrbitRef ref = spec.order[circle][slot];
    const Neighbor nb = across(spec, ref, 0);
    if (nb.circle != circle) continue;
    const Point p = position(spec, s, circle, 0);
    const Point q = position(spec, s, circle, nb.k);
    turn += std::abs(Direction::of(q - p).minus(slot_direction(spec, s, circle, 0, slot)));
  }
  return turn;
}

std::string describe(const std::vector<double>& residuals) {
  std::ostringstream os;
  os.precision(3);
  for (std::size_t i = 0; i < residuals.size(); ++i) os << (i ? ", " : "") << residuals[i];
  return os.str();
}

}  // namespace

int SpiroSpec::vertex_id(int circle, int k) const {
  return circle * symmetry + wrap_index(k, symmetry);
}

bool SpiroSpec::is_half_orbit(int orbit) const {
  const EdgeOrbit& o = orbits[orbit];
  return o.from.circle == o.to.circle && symmetry % 2 == 0 && o.step(symmetry) == symmetry / 2;
}

SpiroGraph expand_spiro(const SpiroSpec& spec) {
  const int n = spec.symmetry;
  const int circles = static_cast<int>(spec.circles.size());
  if (n < 1) throw Error(ErrorCode::ParseError, "symmetry must be positive");
  if (circles == 0) throw Error(ErrorCode::ParseError, "no circles");
  if (static_cast<int>(spec.order.size()) != circles) {
    throw Error(ErrorCode::ParseError, "order must list every circle");
  }
  for (const SpiroCircle& c : spec.circles) {
    if (c.radius && !(*c.radius > 0.0)) throw Error(ErrorCode::ParseError, "radius must be positive");
  }

  std::vector<std::vector<OrbitRef>> expected(circles);
  std::vector<Edge> edges;
  std::vector<int> edge_orbit;
  std::set<std::pair<int, int>> seen;
  for (int oi = 0; oi < static_cast<int>(spec.orbits.size()); ++oi) {
    const EdgeOrbit& o = spec.orbits[oi];
    for (const OrbitEndpoint* end : {&o.from, &o.to}) {
      if (end->circle < 0 || end->circle >= circles) {
        throw Error(ErrorCode::ParseError, "orbit " + std::to_string(oi) + " names a missing circle");
      }
    }
    if (o.from.circle == o.to.circle && o.step(n) == 0) {
      throw Error(ErrorCode::MultiEdgeOnExpansion, "orbit " + std::to_string(oi) + " is a loop");
    }
    const bool half = spec.is_half_orbit(oi);
    expected[o.from.circle].push_back({oi, true});
    if (!half) expected[o.to.circle].push_back({oi, false});
    const int copies = half ? n / 2 : n;
    for (int k = 0; k < copies; ++k) {
      const VertexId u = spec.vertex_id(o.from.circle, k + o.from.offset);
      const VertexId v = spec.vertex_id(o.to.circle, k + o.to.offset);
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        throw Error(ErrorCode::MultiEdgeOnExpansion,
                    "orbit " + std::to_string(oi) + " repeats an edge");
      }
      edges.push_back({u, v});
      edge_orbit.push_back(oi);
    }
  }

  for (int c = 0; c < circles; ++c) {
    std::vector<OrbitRef> given = spec.order[c];
    for (OrbitRef& r : given) {
      if (r.orbit < 0 || r.orbit >= static_cast<int>(spec.orbits.size())) {
        throw Error(ErrorCode::InvalidRotation, "circle " + std::to_string(c) + " names a missing orbit");
      }
      if (spec.is_half_orbit(r.orbit)) r.at_from = true;
    }
    auto less = [](OrbitRef a, OrbitRef b) {
      return a.orbit != b.orbit ? a.orbit < b.orbit : a.at_from < b.at_from;
    };
    std::vector<OrbitRef> want = expected[c];
    std::sort(given.begin(), given.end(), less);
    std::sort(want.begin(), want.end(), less);
    if (given != want) {
      throw Error(ErrorCode::InvalidRotation,
                  "order of circle " + std::to_string(c) + " must list each incident orbit end once");
    }
    int inward = 0;
    for (OrbitRef r : spec.order[c]) inward += across(spec, r, 0).circle < c ? 1 : 0;
    if (inward > 3) {
      throw Error(ErrorCode::TooManyInwardNeighbors,
                  "circle " + std::to_string(c) + " has " + std::to_string(inward) + " inward neighbors");
    }
  }

  std::vector<std::string> names;
  for (int c = 0; c < circles; ++c) {
    for (int k = 0; k < n; ++k) names.push_back(std::to_string(c) + "." + std::to_string(k));
  }
  SpiroGraph out{RotationGraph(circles * n, std::move(edges), std::move(names)), std::move(edge_orbit)};
  for (int c = 0; c < circles; ++c) {
    for (int k = 0; k < n; ++k) {
      std::vector<VertexId> ccw;
      for (OrbitRef r : spec.order[c]) {
        const Neighbor nb = across(spec, r, k);
        ccw.push_back(spec.vertex_id(nb.circle, nb.k));
      }
      out.graph.set_rotation(spec.vertex_id(c, k), std::move(ccw));
    }
  }
  return out;
}

CircleSolution solve_circle(const SpiroSpec& spec, const SpiroGraph& expanded, int circle,
                            const std::vector<CircleSolution>& inner, const SpiroOptions& options) {
  const int deg = degree_of(spec, circle);
  const std::vector<Constraint> cons = constraints_of(spec, circle, inner);
  const bool has_inward = !cons.empty() && cons.front().kind == Constraint::Kind::inward;
  const double lo = circle == 0 ? 0.0 : inner[circle - 1].radius;

  auto twist_at = [&](double r) { return has_inward ? wrap_signed(cons.front().arrival(r)) : 0.0; };

  CircleSolution sol;
  std::optional<double> radius = spec.circles[circle].radius;
  if (radius) {
    sol.source = RadiusSource::fixed;
  } else if (circle == 0) {
    radius = 1.0;
    sol.source = RadiusSource::fixed;
  } else if (has_inward) {
    const std::vector<double> rs = radius_samples(lo, options);
    for (std::size_t j = 1; j < cons.size(); ++j) {
      auto f = [&, j](double r) { return cons[j].residual(twist_at(r), r, deg); };
      std::vector<double> values;
      double worst = 0.0;
      for (double r : rs) {
        values.push_back(f(r));
        worst = std::max(worst, std::abs(values.back()));
      }
      if (worst < 1e-10) continue;  // holds for every radius
      const std::vector<int> changes = sign_change_intervals(values);
      if (changes.empty()) {
        throw Error(ErrorCode::RootFindingFailed,
                    "circle " + std::to_string(circle) + ": no radius in (" + std::to_string(lo) +
                        ", " + std::to_string(options.bracket * lo) + ")");
      }
      radius = bisect(f, rs[changes.front()], rs[changes.front() + 1]);
      sol.source = RadiusSource::solved;
      sol.sign_changes = static_cast<int>(changes.size());
      break;
    }
  }

  auto choose_twist = [&](double r) {
    if (has_inward) return twist_at(r);
    std::vector<double> candidates;
    if (cons.empty()) {
      candidates.push_back(0.0);
    } else if (cons.front().kind == Constraint::Kind::diameter) {
      candidates.push_back(wrap_signed(kPi - kTwoPi * cons.front().first_slot / deg));
    } else {
      const double t0 = -kPi * (cons.front().first_slot + cons.front().second_slot) / deg;
      candidates = {wrap_signed(t0), wrap_signed(t0 + kPi)};
    }
    double best = candidates.front();
    double best_turn = INFINITY;
    bool found = false;
    for (double t : candidates) {
      const bool ok = std::all_of(cons.begin(), cons.end(),
                                  [&](const Constraint& c) { return std::abs(c.residual(t, r, deg)) < 1e-9; });
      if (!ok) continue;
      const double turn = total_chord_turn(spec, circle, t, r);
      if (!found || turn < best_turn - 1e-12) {
        best = t;
        best_turn = turn;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::InconsistentThirdConstraint,
                  "circle " + std::to_string(circle) + ": chord orbits disagree on the twist");
    }
    return best;
  };

  if (!radius) {
    sol.source = RadiusSource::heuristic;
    std::vector<CircleSolution> trial = inner;
    trial.resize(circle + 1);
    double r = options.growth * lo;
    radius = r;
    for (int step = 0; step <= options.shrink_steps && r > lo * (1.0 + 1e-9); ++step, r *= options.shrink) {
      trial[circle].radius = r;
      trial[circle].twist = choose_twist(r);
      if (is_clear(spec, expanded, trial, options.clearance)) {
        radius = r;
        break;
      }
    }
  }

  sol.radius = *radius;
  sol.twist = choose_twist(sol.radius);
  double worst = 0.0;
  for (const Constraint& c : cons) {
    sol.residuals.push_back(c.residual(sol.twist, sol.radius, deg));
    worst = std::max(worst, std::abs(sol.residuals.back()));
  }
  if (worst >= 1e-8) {
    throw Error(ErrorCode::InconsistentThirdConstraint,
                "circle " + std::to_string(circle) + " residuals " + describe(sol.residuals));
  }
  return sol;
}

SpiroDrawing draw_spirograph(const SpiroSpec& spec, const SpiroOptions& options) {
  SpiroDrawing out{expand_spiro(spec), {}, {}};
  const RotationGraph& g = out.expanded.graph;
  for (int c = 0; c < static_cast<int>(spec.circles.size()); ++c) {
    out.circles.push_back(solve_circle(spec, out.expanded, c, out.circles, options));
  }

  Drawing& d = out.drawing;
  d = blank_drawing(g);
  const int n = spec.symmetry;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int c = v / n, k = v % n;
    d.positions[v] = position(spec, out.circles[c], c, k);
    d.frames[v].base = slot_direction(spec, out.circles[c], c, k, 0);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    DrawnEdge& de = d.edges[e];
    de.arc = edge_arc(spec, out.circles, g, e);
    de.slot_u = g.rotation_index(de.u, de.v);
    de.slot_v = g.rotation_index(de.v, de.u);
    de.factor = out.expanded.edge_orbit[e];
  }
  return out;
}

double symmetry_defect(const SpiroSpec& spec, const Drawing& d) {
  const int n = spec.symmetry;
  const double c = std::cos(kTwoPi / n), s = std::sin(kTwoPi / n);
  double worst = 0.0;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const Point p = d.positions[v];
    const Point rotated{c * p.x - s * p.y, s * p.x + c * p.y};
    const VertexId image = spec.vertex_id(v / n, v % n + 1);
    worst = std::max(worst, distance(rotated, d.positions[image]));
  }
  return worst;
}

}  // namespace lombardi
