#include "lombardi/degenerate_layout.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <limits>
#include <random>
#include <sstream>

#include "lombardi/error.hpp"
#include "lombardi/mobius.hpp"

namespace lombardi {

namespace {

constexpr double kNoScore = -std::numeric_limits<double>::infinity();

// Thrown when every admissible position lies at infinity; a Mobius remap of
// the partial drawing brings it back into the plane.
struct LocusAtInfinity {};

struct Candidate {
  Point x;
  std::vector<Arc> arcs;  // one per placed neighbor, running towards x
  double score = kNoScore;
  double spread = 0.0;  // total distance to the neighbors, for tie-breaks
};

Candidate evaluate(const PartialState& s, VertexId v, const std::vector<VertexId>& from, Point x) {
  Candidate c;
  c.x = x;
  const Drawing& d = s.drawing();
  double score = s.clearance_of_point(x);
  double cap = 0.0;
  try {
    for (VertexId w : from) {
      const Arc a = arc_from_tangent(d.positions[w], s.slot(w, v), x);
      score = std::min(score, s.clearance_of_arc(a, {w}));
      c.spread += distance(d.positions[w], x);
      c.arcs.push_back(a);
    }
  } catch (const Error&) {
    return c;
  }
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = i + 1; j < from.size(); ++j) {
      cap = std::max(cap, distance(d.positions[from[i]], d.positions[from[j]]));
    }
  }
  c.score = std::min(score, cap);
  return c;
}

bool better(const Candidate& a, const Candidate& b) {
  const double tie = 1e-12 * std::max(1.0, std::abs(b.score));
  if (a.score > b.score + tie) return true;
  if (a.score < b.score - tie) return false;
  return a.spread < b.spread;
}

Point locus_point(const GeneralizedCircle& locus, Point p, Point q, double t) {
  if (!locus.is_line) return locus.circle.center + locus.circle.radius * unit_vector(kTwoPi * t);
  return (p + q) / 2.0 + distance(p, q) * std::tan(kPi * (t - 0.5)) * locus.line_dir;
}

// Best clear point of the locus, refined when every sample is too close to
// something.
Candidate sample_locus(PartialState& s, VertexId v, const std::vector<VertexId>& from,
                       const GeneralizedCircle& locus) {
  const Drawing& d = s.drawing();
  const Point p = d.positions[from[0]];
  const Point q = d.positions[from[1]];
  const int n = s.options().samples;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Candidate best;
  double best_t = 0.0;
  std::vector<Candidate> pool;
  const auto scan = [&](int count, double lo, double hi) {
    const double phase = unit(s.rng());
    for (int i = 0; i < count; ++i) {
      const double t = lo + (hi - lo) * (i + phase) / count;
      if (locus.is_line && (t <= 1e-3 || t >= 1.0 - 1e-3)) continue;
      Candidate c = evaluate(s, v, from, locus_point(locus, p, q, t));
      if (c.score == kNoScore) continue;
      if (!s.options().greedy) pool.push_back(c);
      if (best.score == kNoScore || better(c, best)) {
        best = std::move(c);
        best_t = t;
      }
    }
  };
  scan(n, 0.0, 1.0);
  if (best.score == kNoScore && locus.is_line) throw LocusAtInfinity{};
  const double eps = s.options().clearance;
  if (!s.options().greedy && best.score >= eps) {
    std::erase_if(pool, [&](const Candidate& c) { return c.score < std::max(eps, best.score / 4); });
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(s.rng())];
  }
  if (best.score < eps) scan(4 * n, 0.0, 1.0);
  if (best.score < eps) scan(4 * n, best_t - 1.0 / n, best_t + 1.0 / n);
  if (best.score < eps) {
    throw Error(ErrorCode::NoClearPoint,
                "no point on the locus of vertex " + s.graph().name(v) + " keeps clearance");
  }
  return best;
}

void commit(PartialState& s, VertexId v, const std::vector<VertexId>& from, const Candidate& c) {
  const RotationGraph& g = s.graph();
  s.place(v, c.x);
  for (std::size_t i = 0; i < from.size(); ++i) s.add_arc(from[i], v, c.arcs[i]);
  const Direction at_v = endpoint_tangents(c.arcs[0]).second;
  s.set_frame(v, frame_with_slot(at_v, g.rotation_index(v, from[0]), g.degree(v)));
}

LocusInputs locus_inputs(const PartialState& s, VertexId v, VertexId p, VertexId q) {
  const RotationGraph& g = s.graph();
  const int deg = g.degree(v);
  const int k = ((g.rotation_index(v, q) - g.rotation_index(v, p)) % deg + deg) % deg;
  LocusInputs in;
  in.p = s.drawing().positions[p];
  in.q = s.drawing().positions[q];
  in.dir_p = s.slot(p, v);
  in.dir_q = s.slot(q, v);
  in.theta_pq = kTwoPi * k / deg;
  return in;
}

void place_seed(PartialState& s, VertexId v, int& cell) {
  const double spacing = s.options().grid_spacing;
  for (;; ++cell) {
    const Point x{spacing * (cell % 8), -spacing * (cell / 8)};
    if (s.clearance_of_point(x) >= spacing / 2) {
      s.place(v, x);
      s.set_frame(v, {Direction(0.0), s.graph().degree(v)});
      ++cell;
      return;
    }
  }
}

void place_degree1(PartialState& s, VertexId v, VertexId p) {
  const RotationGraph& g = s.graph();
  const Point from = s.drawing().positions[p];
  const Direction dir = s.slot(p, v);
  const double eps = s.options().clearance;
  double len = s.options().edge_length;
  for (int attempt = 0; attempt < 60; ++attempt, len /= 2) {
    const Point x = from + len * dir.unit();
    const Arc a = Arc::segment(from, x);
    if (s.clearance_of_point(x) < eps || s.clearance_of_arc(a, {p}) < eps) continue;
    s.place(v, x);
    s.add_arc(p, v, a);
    s.set_frame(v, frame_with_slot(dir.reversed(), g.rotation_index(v, p), g.degree(v)));
    return;
  }
  throw Error(ErrorCode::NoClearPoint, "no clear position next to vertex " + g.name(p));
}

std::vector<Point> three_locus_points(const GeneralizedCircle& pq, const GeneralizedCircle& pr,
                                      const GeneralizedCircle& qr, Point p, Point q, Point r,
                                      bool& all_identical) {
  all_identical = false;
  const std::array<std::tuple<const GeneralizedCircle*, const GeneralizedCircle*, Point>, 3> tries{
      std::tuple{&pq, &pr, p}, std::tuple{&pq, &qr, q}, std::tuple{&pr, &qr, r}};
  for (const auto& [a, b, shared] : tries) {
    std::vector<Point> pts;
    try {
      pts = intersect_general(*a, *b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IdenticalCircles) continue;
      throw;
    }
    std::vector<Point> out;
    const double scale = std::max({1.0, distance(p, q), distance(p, r), distance(q, r)});
    for (Point x : pts) {
      if (distance(x, shared) <= 1e-9 * scale) continue;
      if (pq.distance_to(x) <= 1e-8 * scale && pr.distance_to(x) <= 1e-8 * scale &&
          qr.distance_to(x) <= 1e-8 * scale) {
        out.push_back(x);
      }
    }
    return out;
  }
  all_identical = true;
  return {};
}

void place_degree3(PartialState& s, VertexId v, const std::vector<VertexId>& from) {
  const RotationGraph& g = s.graph();
  const Drawing& d = s.drawing();
  const VertexId p = from[0], q = from[1], r = from[2];
  const GeneralizedCircle l_pq = meeting_locus_general(locus_inputs(s, v, p, q));
  const GeneralizedCircle l_pr = meeting_locus_general(locus_inputs(s, v, p, r));
  const GeneralizedCircle l_qr = meeting_locus_general(locus_inputs(s, v, q, r));
  bool all_identical = false;
  const std::vector<Point> points =
      three_locus_points(l_pq, l_pr, l_qr, d.positions[p], d.positions[q], d.positions[r], all_identical);
  if (all_identical) {
    commit(s, v, from, sample_locus(s, v, from, l_pq));
    return;
  }

  if (points.empty()) throw LocusAtInfinity{};
  const double eps = s.options().clearance;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::optional<Candidate> best;
  for (Point x : points) {
    Candidate c = evaluate(s, v, from, x);
    if (c.score < eps) continue;
    // Rotation check: the three arcs must arrive in v's cyclic order.
    const Direction t0 = endpoint_tangents(c.arcs[0]).second;
    const VertexFrame f = frame_with_slot(t0, g.rotation_index(v, p), g.degree(v));
    bool ordered = true;
    for (std::size_t i = 1; i < 3; ++i) {
      const Direction ti = endpoint_tangents(c.arcs[i]).second;
      ordered = ordered && std::abs(ti.minus(f.slot(g.rotation_index(v, from[i])))) < 1e-8;
    }
    if (!ordered) continue;
    if (!best || better(c, *best) || (!s.options().greedy && unit(s.rng()) < 0.5)) best = std::move(c);
  }
  if (!best) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "vertex " << g.name(v) << " has no free position; rejected candidates:";
    msg << " (" << d.positions[p].x << ", " << d.positions[p].y << ")";
    for (Point x : points) msg << " (" << x.x << ", " << x.y << ")";
    throw Error(ErrorCode::CoincidentPlacement, msg.str());
  }
  commit(s, v, from, *best);
}

// Sends a point away from every feature to infinity and rescales back to
// the previous extent. Angles, and with them all frames, are preserved up to
// the local rotation of the map.
void remap(PartialState& s) {
  Drawing& d = s.drawing();
  const auto& placed = s.insertion_order();
  Point mid;
  for (VertexId v : placed) mid = mid + d.positions[v];
  mid = mid / static_cast<double>(placed.size());
  double extent = 1.0;
  for (VertexId v : placed) extent = std::max(extent, distance(mid, d.positions[v]));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point pole;
  double room = -1.0;
  for (int i = 0; i < 64; ++i) {
    const Point c = mid + extent * (0.25 + unit(s.rng())) * unit_vector(kTwoPi * unit(s.rng()));
    const double r = s.clearance_of_point(c);
    if (r > room) {
      room = r;
      pole = c;
    }
  }
  const MobiusMap invert(0.0, 1.0, 1.0, -to_complex(pole));
  Point image_mid;
  for (VertexId v : placed) image_mid = image_mid + invert.apply(d.positions[v]);
  image_mid = image_mid / static_cast<double>(placed.size());
  double image_extent = 0.0;
  for (VertexId v : placed) {
    image_extent = std::max(image_extent, distance(image_mid, invert.apply(d.positions[v])));
  }
  const double scale = image_extent > 0.0 ? extent / image_extent : 1.0;
  const MobiusMap f =
      MobiusMap(scale, to_complex(mid) - scale * to_complex(image_mid), 0.0, 1.0).compose(invert);

  for (EdgeId e = 0; e < s.graph().edge_count(); ++e) {
    if (s.drawn(e)) d.edges[e].arc = f.apply(d.edges[e].arc);
  }
  for (VertexId v : placed) {
    const Complex z = to_complex(d.positions[v]);
    const Complex denom = f.c() * z + f.d();
    const double turn = std::arg((f.a() * f.d() - f.b() * f.c()) / (denom * denom));
    d.positions[v] = f.apply(d.positions[v]);
    d.frames[v].base = d.frames[v].base.rotated(turn);
  }
  for (EdgeId e = 0; e < s.graph().edge_count(); ++e) {
    if (!s.drawn(e)) continue;
    // Pin endpoints to the mapped vertex positions exactly.
    const DrawnEdge& de = d.edges[e];
    d.edges[e].arc = Arc(d.positions[de.u], d.positions[de.v], de.arc.bulge());
  }
}

Drawing run_once(const RotationGraph& g, const DegenerateOptions& opts, const DegeneracyOrder& order) {
  PartialState s(g, opts);
  int cell = 0;
  for (auto it = order.removal_order.rbegin(); it != order.removal_order.rend(); ++it) {
    const VertexId v = *it;
    std::vector<VertexId> from;
    for (VertexId w : g.neighbors(v)) {
      if (s.placed(w)) from.push_back(w);
    }
    std::sort(from.begin(), from.end());
    for (int remaps = 0;; ++remaps) {
      try {
        switch (from.size()) {
          case 0: place_seed(s, v, cell); break;
          case 1: place_degree1(s, v, from[0]); break;
          case 2: place_degree2(s, v, from[0], from[1]); break;
          default: place_degree3(s, v, from); break;
        }
        break;
      } catch (const LocusAtInfinity&) {
        if (remaps == 8) {
          throw Error(ErrorCode::NoClearPoint,
                      "every position for vertex " + g.name(v) + " lies at infinity");
        }
        remap(s);
      }
    }
  }
  return s.drawing();
}

Drawing draw_incremental(const RotationGraph& g, const DegenerateOptions& opts, int max_placed) {
  const DegeneracyOrder order = degeneracy_order(g);
  if (order.degeneracy > max_placed) {
    throw Error(max_placed == 2 ? ErrorCode::NotTwoDegenerate : ErrorCode::NotThreeDegenerate,
                "graph has degeneracy " + std::to_string(order.degeneracy));
  }
  std::seed_seq seq{opts.seed};
  std::vector<std::uint32_t> seeds(std::max(1, opts.restarts + 1));
  seq.generate(seeds.begin(), seeds.end());
  DegenerateOptions attempt = opts;
  for (std::size_t i = 0;; ++i) {
    attempt.seed = i == 0 ? opts.seed : seeds[i];
    attempt.greedy = opts.greedy && i == 0;
    try {
      return run_once(g, attempt, order);
    } catch (const Error& e) {
      const bool blocked = e.code() == ErrorCode::NoClearPoint || e.code() == ErrorCode::CoincidentPlacement;
      if (!blocked || i + 1 >= seeds.size()) throw;
    }
  }
}

}  // namespace

PartialState::PartialState(const RotationGraph& g, const DegenerateOptions& opts)
    : g_(&g),
      opts_(opts),
      drawing_(blank_drawing(g)),
      placed_(g.vertex_count(), false),
      drawn_(g.edge_count(), false),
      rng_(opts.seed) {
  drawing_.edges.resize(g.edge_count());
}

Direction PartialState::slot(VertexId at, VertexId to) const {
  return drawing_.frames[at].slot(g_->rotation_index(at, to));
}

double PartialState::clearance_of_point(Point x, std::initializer_list<VertexId> skip) const {
  double best = std::numeric_limits<double>::infinity();
  for (VertexId w : order_) {
    if (std::find(skip.begin(), skip.end(), w) != skip.end()) continue;
    best = std::min(best, distance(x, drawing_.positions[w]));
  }
  for (EdgeId e = 0; e < g_->edge_count(); ++e) {
    if (drawn_[e]) best = std::min(best, arc_clearance(drawing_.edges[e].arc, x));
  }
  return best;
}

double PartialState::clearance_of_arc(const Arc& a, std::initializer_list<VertexId> ends) const {
  double best = std::numeric_limits<double>::infinity();
  for (VertexId w : order_) {
    if (std::find(ends.begin(), ends.end(), w) != ends.end()) continue;
    best = std::min(best, arc_clearance(a, drawing_.positions[w]));
  }
  return best;
}

void PartialState::place(VertexId v, Point x) {
  drawing_.positions[v] = x;
  placed_[v] = true;
  order_.push_back(v);
}

void PartialState::add_arc(VertexId from, VertexId to, const Arc& arc) {
  const EdgeId e = *g_->edge_between(from, to);
  drawing_.edges[e] = {from, to, arc, g_->rotation_index(from, to), g_->rotation_index(to, from), -1};
  drawn_[e] = true;
}

Point place_degree2(PartialState& s, VertexId v, VertexId p, VertexId q) {
  const GeneralizedCircle locus = meeting_locus_general(locus_inputs(s, v, p, q));
  const std::vector<VertexId> from{p, q};
  const Candidate c = sample_locus(s, v, from, locus);
  commit(s, v, from, c);
  return c.x;
}

Drawing draw_2degenerate(const RotationGraph& g, const DegenerateOptions& opts) {
  return draw_incremental(g, opts, 2);
}

Drawing draw_3degenerate(const RotationGraph& g, const DegenerateOptions& opts) {
  return draw_incremental(g, opts, 3);
}

}  // namespace lombardi
