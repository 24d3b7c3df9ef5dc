#include "lombardi/circular_layout.hpp"

#include <algorithm>
#include <random>

#include "lombardi/error.hpp"
#include "lombardi/verify.hpp"

namespace lombardi {

namespace {

FactorSlots mirror_pair(double tail) {
  FactorSlots f;
  f.tail_offset = tail;
  f.head_offset = -tail;
  f.angle_to_circle = std::abs(wrap_signed(tail - kPi / 2));
  return f;
}

FactorSlots perpendicular(bool alternating) {
  FactorSlots f;
  f.tail_offset = kPi;
  f.head_offset = kPi;
  f.alternating = alternating;
  f.angle_to_circle = kPi / 2;
  return f;
}

struct Oriented {
  VertexId from;
  VertexId to;
  double offset;  // at `from`
};

}  // namespace

int SlotAssignment::slot_index(double offset) const {
  const double step = kTwoPi / degree;
  const long k = std::lround(normalize_angle(offset - first_offset) / step);
  return static_cast<int>(((k % degree) + degree) % degree);
}

SlotAssignment assign_slots(int degree, const DecompositionPlan& plan) {
  SlotAssignment s;
  s.degree = degree;
  const int d = degree;
  if (d != plan.degree) throw Error(ErrorCode::InfeasibleCase, "plan degree differs from requested degree");

  // Free mirror pairs (positive member in (0, pi)), in increasing order.
  std::vector<double> pairs;
  switch (plan.plan_case) {
    case PlanCase::div4:
      if (d % 4 != 0) throw Error(ErrorCode::InfeasibleCase, "div4 case needs degree divisible by 4");
      s.first_offset = kPi / d;
      for (int j = 0; j < d / 2; ++j) pairs.push_back(kPi * (2 * j + 1) / d);
      break;
    case PlanCase::odd:
      if (d % 2 != 1) throw Error(ErrorCode::InfeasibleCase, "odd case needs odd degree");
      s.first_offset = kPi;
      for (int j = 1; j <= (d - 1) / 2; ++j) pairs.push_back(kPi - kTwoPi * j / d);
      break;
    case PlanCase::two_mod_4_hamiltonian:
      if (d % 4 != 2) throw Error(ErrorCode::InfeasibleCase, "degree is not 2 mod 4");
      s.first_offset = kPi / d;
      for (int j = 0; j < d / 2; ++j) {
        if (2 * j + 1 != d / 2) pairs.push_back(kPi * (2 * j + 1) / d);
      }
      break;
    case PlanCase::two_mod_4_bipartite:
      if (d % 4 != 2) throw Error(ErrorCode::InfeasibleCase, "degree is not 2 mod 4");
      s.first_offset = 0.0;
      for (int j = 1; j < d / 2; ++j) pairs.push_back(kTwoPi * j / d);
      break;
  }
  std::size_t next = 0;
  for (const Factor& f : plan.factors) {
    switch (f.tag) {
      case FactorTag::perpendicular_matching:
        s.factors.push_back(perpendicular(false));
        break;
      case FactorTag::perpendicular_bipartite:
        s.factors.push_back(perpendicular(true));
        break;
      case FactorTag::on_circle_hamiltonian:
        s.factors.push_back(mirror_pair(kPi / 2));
        break;
      case FactorTag::plain:
        if (next == pairs.size()) throw Error(ErrorCode::InfeasibleCase, "more factors than slot pairs");
        s.factors.push_back(mirror_pair(pairs[next++]));
        break;
    }
  }
  if (next != pairs.size()) {
    throw Error(ErrorCode::InfeasibleCase, "slot pairs left unused");
  }

  double best = kPi;
  for (int k = 0; k < d; ++k) {
    const double off = wrap_signed(s.first_offset + kTwoPi * k / d - kPi);
    if (std::abs(off) < std::abs(best)) best = off;
  }
  s.twist = best;
  return s;
}

Drawing draw_circular(const RotationGraph& g, const DecompositionPlan& plan, const CircularOptions& opts) {
  if (!plan_is_valid(g, plan)) throw Error(ErrorCode::InvalidPlan, "plan does not decompose this graph");
  const SlotAssignment slots = assign_slots(plan.degree, plan);
  const int n = g.vertex_count();

  // Orient every edge once, remembering the offset at its tail.
  std::vector<Oriented> oriented(g.edge_count());
  for (std::size_t fi = 0; fi < plan.factors.size(); ++fi) {
    const Factor& f = plan.factors[fi];
    const FactorSlots& fs = slots.factors[fi];
    if (f.kind == FactorKind::one_regular) {
      for (EdgeId e : f.edges) oriented[e] = {g.edge(e).u, g.edge(e).v, fs.tail_offset};
      continue;
    }
    std::vector<std::vector<VertexId>> cycles;
    if (f.tag == FactorTag::on_circle_hamiltonian) {
      cycles.push_back(plan.hamiltonian_order);
    } else {
      cycles = factor_cycles(g, f.edges);
    }
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const VertexId a = cyc[i];
        const VertexId b = cyc[(i + 1) % cyc.size()];
        const double off = fs.alternating ? (i % 2 == 0 ? kPi : 0.0) : fs.tail_offset;
        oriented[*g.edge_between(a, b)] = {a, b, off};
      }
    }
  }
  std::vector<int> factor_of(g.edge_count(), -1);
  for (std::size_t fi = 0; fi < plan.factors.size(); ++fi) {
    for (EdgeId e : plan.factors[fi].edges) factor_of[e] = static_cast<int>(fi);
  }

  std::vector<int> rank(n);
  if (plan.plan_case == PlanCase::two_mod_4_hamiltonian) {
    for (int i = 0; i < n; ++i) rank[plan.hamiltonian_order[i]] = i;
  } else {
    for (int i = 0; i < n; ++i) rank[i] = i;
  }

  const Circle host(Point{}, 1.0);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-opts.jitter, opts.jitter);
  std::string last_failure = "no attempt";
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Drawing d = blank_drawing(g);
    d.host = host;
    for (VertexId v = 0; v < n; ++v) {
      const double angle = kTwoPi * rank[v] / n + (attempt == 0 ? 0.0 : jitter(rng));
      d.positions[v] = unit_vector(angle);
      d.frames[v] = {Direction(angle + slots.first_offset), plan.degree};
    }
    try {
      d.edges.resize(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Oriented& o = oriented[e];
        const double psi_from = d.positions[o.from].angle();
        const Arc arc = arc_from_tangent(d.positions[o.from], Direction(psi_from + o.offset),
                                         d.positions[o.to]);
        const double head = std::abs(o.offset - kPi) < 1e-12 || o.offset == 0.0 ? o.offset : -o.offset;
        d.edges[e] = {o.from, o.to, arc, slots.slot_index(o.offset), slots.slot_index(head),
                      factor_of[e]};
      }
    } catch (const Error& err) {
      last_failure = err.what();
      continue;
    }
    const VerificationReport r = verify_drawing(d, opts.clearance);
    if (r.max_deviation < 1e-9 && r.incidence.empty()) return d;
    last_failure = r.incidence.empty() ? "resolution audit failed" : "arc passes through a vertex";
  }
  throw Error(ErrorCode::PerturbationExhausted,
              "no valid placement after " + std::to_string(opts.max_attempts) + " attempts (" +
                  last_failure + ")");
}

}  // namespace lombardi
