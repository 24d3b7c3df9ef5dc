#include "lombardi/decompose.hpp"

#include <algorithm>
#include <functional>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

// Hierholzer on the edges of one component; returns (vertex, edge) steps of
// a closed walk starting at `start`.
std::vector<std::pair<VertexId, EdgeId>> euler_circuit(const RotationGraph& g, VertexId start,
                                                       std::vector<bool>& used_edge) {
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<std::pair<VertexId, EdgeId>> stack{{start, -1}};
  std::vector<std::pair<VertexId, EdgeId>> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    const auto inc = g.incident_edges(v);
    while (cursor[v] < inc.size() && used_edge[inc[cursor[v]]]) ++cursor[v];
    if (cursor[v] == inc.size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const EdgeId e = inc[cursor[v]];
    used_edge[e] = true;
    stack.emplace_back(g.edge(e).other(v), e);
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;  // circuit[i].second is the edge entering circuit[i].first
}

void require_even_degrees(const RotationGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw Error(ErrorCode::OddDegree, "vertex " + g.name(v) + " has odd degree");
    }
  }
}

std::optional<int> regular_degree(const RotationGraph& g) {
  if (g.vertex_count() == 0) return 0;
  const int d = g.degree(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<EdgeId> complement_edges(const RotationGraph& g, const std::vector<EdgeId>& taken) {
  std::vector<bool> mark(g.edge_count(), false);
  for (EdgeId e : taken) mark[e] = true;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mark[e]) rest.push_back(e);
  }
  return rest;
}

// Runs two_factorize on a subgraph and maps edge ids back.
std::vector<Factor> two_factorize_subset(const RotationGraph& g, const std::vector<EdgeId>& keep) {
  if (keep.empty()) return {};
  const RotationGraph sub = edge_subgraph(g, keep);
  std::vector<Factor> factors = two_factorize(sub);
  for (Factor& f : factors) {
    for (EdgeId& e : f.edges) {
      const Edge& se = sub.edge(e);
      e = *g.edge_between(se.u, se.v);
    }
    std::sort(f.edges.begin(), f.edges.end());
  }
  return factors;
}

}  // namespace

bool is_spanning_factor(const RotationGraph& g, const Factor& f) {
  const int want = f.kind == FactorKind::one_regular ? 1 : 2;
  std::vector<int> deg(g.vertex_count(), 0);
  std::vector<bool> seen(g.edge_count(), false);
  for (EdgeId e : f.edges) {
    if (e < 0 || e >= g.edge_count() || seen[e]) return false;
    seen[e] = true;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return std::all_of(deg.begin(), deg.end(), [want](int d) { return d == want; });
}

std::vector<std::vector<VertexId>> factor_cycles(const RotationGraph& g,
                                                 const std::vector<EdgeId>& edges) {
  std::vector<std::vector<VertexId>> nbr(g.vertex_count());
  for (EdgeId e : edges) {
    nbr[g.edge(e).u].push_back(g.edge(e).v);
    nbr[g.edge(e).v].push_back(g.edge(e).u);
  }
  for (auto& list : nbr) {
    if (!list.empty() && list.size() != 2) {
      throw Error(ErrorCode::InvalidPlan, "edge set is not 2-regular");
    }
    std::sort(list.begin(), list.end());
  }
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<std::vector<VertexId>> cycles;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (visited[s] || nbr[s].empty()) continue;
    std::vector<VertexId> cyc{s};
    visited[s] = true;
    VertexId prev = s;
    VertexId cur = nbr[s][0];
    while (cur != s) {
      visited[cur] = true;
      cyc.push_back(cur);
      const VertexId next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::pair<std::vector<EdgeId>, std::vector<EdgeId>> euler_halving(const RotationGraph& g) {
  require_even_degrees(g);
  std::vector<bool> used(g.edge_count(), false);
  std::vector<EdgeId> first, second;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (g.degree(s) == 0) continue;
    const auto inc = g.incident_edges(s);
    if (std::all_of(inc.begin(), inc.end(), [&](EdgeId e) { return used[e]; })) continue;
    const auto circuit = euler_circuit(g, s, used);
    const std::size_t len = circuit.size() - 1;
    if (len % 2 != 0) {
      throw Error(ErrorCode::UnbalancedCircuit,
                  "component of vertex " + g.name(s) + " has an odd number of edges");
    }
    for (std::size_t i = 1; i < circuit.size(); ++i) {
      ((i % 2 == 1) ? first : second).push_back(circuit[i].second);
    }
  }
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {first, second};
}

std::vector<Factor> two_factorize(const RotationGraph& g) {
  const auto d = regular_degree(g);
  if (!d || *d % 2 != 0) throw Error(ErrorCode::NotEvenRegular, "graph is not regular of even degree");
  const int k = *d / 2;
  if (k == 0) return {};

  // Orient along Euler circuits: every vertex gets in = out = k.
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::pair<int, int>> arcs(g.edge_count());
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const auto inc = g.incident_edges(s);
    if (std::all_of(inc.begin(), inc.end(), [&](EdgeId e) { return used[e]; })) continue;
    const auto circuit = euler_circuit(g, s, used);
    for (std::size_t i = 1; i < circuit.size(); ++i) {
      arcs[circuit[i].second] = {circuit[i - 1].first, circuit[i].first};
    }
  }
  const int n = g.vertex_count();
  const std::vector<int> color = regular_bipartite_coloring(n, n, arcs, k);
  std::vector<Factor> factors(k);
  for (EdgeId e = 0; e < g.edge_count(); ++e) factors[color[e]].edges.push_back(e);
  return factors;
}

CycleSearch hamiltonian_cycle(const RotationGraph& g, std::int64_t budget) {
  CycleSearch out;
  const int n = g.vertex_count();
  if (n < 3 || classify(g).component_count != 1) {
    out.status = SearchStatus::absent;
    return out;
  }
  std::vector<std::vector<VertexId>> nbr(n);
  for (VertexId v = 0; v < n; ++v) {
    nbr[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nbr[v].begin(), nbr[v].end());
  }
  std::vector<bool> on_path(n, false);
  std::vector<VertexId> path{0};
  on_path[0] = true;
  bool exhausted = false;

  std::function<bool()> extend = [&]() -> bool {
    if (++out.nodes > budget) {
      exhausted = true;
      return false;
    }
    const VertexId v = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(v, 0);
    for (VertexId w : nbr[v]) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      if (extend()) return true;
      if (exhausted) return false;
      path.pop_back();
      on_path[w] = false;
    }
    return false;
  };

  if (extend()) {
    out.status = SearchStatus::found;
    out.cycle = path;
  } else {
    out.status = exhausted ? SearchStatus::unknown : SearchStatus::absent;
  }
  return out;
}

FactorSearch even_two_factor(const RotationGraph& g, std::int64_t budget) {
  FactorSearch out;
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> nbr(n);
  for (VertexId v = 0; v < n; ++v) {
    nbr[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nbr[v].begin(), nbr[v].end());
  }
  std::vector<bool> covered(n, false);
  std::vector<EdgeId> chosen;
  bool exhausted = false;

  std::function<bool()> next_cycle;
  // Grows a path from `start`; closes it only at even length >= 4.
  std::function<bool(VertexId, std::vector<VertexId>&)> grow =
      [&](VertexId start, std::vector<VertexId>& path) -> bool {
    if (++out.nodes > budget) {
      exhausted = true;
      return false;
    }
    const VertexId v = path.back();
    if (path.size() >= 4 && path.size() % 2 == 0 && g.has_edge(v, start)) {
      const std::size_t mark = chosen.size();
      for (std::size_t i = 0; i + 1 < path.size(); ++i) chosen.push_back(*g.edge_between(path[i], path[i + 1]));
      chosen.push_back(*g.edge_between(v, start));
      if (next_cycle()) return true;
      if (exhausted) return false;
      chosen.resize(mark);
    }
    for (VertexId w : nbr[v]) {
      if (covered[w] || w < start) continue;
      covered[w] = true;
      path.push_back(w);
      if (grow(start, path)) return true;
      if (exhausted) return false;
      path.pop_back();
      covered[w] = false;
    }
    return false;
  };

  next_cycle = [&]() -> bool {
    VertexId s = 0;
    while (s < n && covered[s]) ++s;
    if (s == n) return true;
    covered[s] = true;
    std::vector<VertexId> path{s};
    if (grow(s, path)) return true;
    covered[s] = false;
    return false;
  };

  if (n > 0 && next_cycle()) {
    std::sort(chosen.begin(), chosen.end());
    out.status = SearchStatus::found;
    out.factor = Factor{chosen, FactorKind::two_regular, FactorTag::perpendicular_bipartite};
  } else {
    out.status = exhausted ? SearchStatus::unknown : SearchStatus::absent;
  }
  return out;
}

const char* to_string(PlanCase c) {
  switch (c) {
    case PlanCase::div4: return "div4";
    case PlanCase::odd: return "odd";
    case PlanCase::two_mod_4_hamiltonian: return "two-mod-4-hamiltonian";
    case PlanCase::two_mod_4_bipartite: return "two-mod-4-bipartite";
  }
  return "unknown";
}

DecompositionPlan circular_plan(const RotationGraph& g, std::int64_t budget) {
  const auto d = regular_degree(g);
  if (!d) throw Error(ErrorCode::NotRegular, "graph is not regular");
  DecompositionPlan plan;
  plan.degree = *d;

  if (*d % 4 == 0) {
    plan.plan_case = PlanCase::div4;
    plan.factors = two_factorize(g);
    return plan;
  }

  if (*d % 2 == 1) {
    plan.plan_case = PlanCase::odd;
    const PerfectMatchingResult pm = perfect_matching(g);
    if (!pm.matching) {
      std::string barrier;
      for (VertexId v : pm.witness->barrier) barrier += (barrier.empty() ? "" : ",") + g.name(v);
      throw Error(ErrorCode::NoPerfectMatching,
                  "no perfect matching; removing {" + barrier + "} leaves " +
                      std::to_string(pm.witness->odd_components.size()) + " odd components");
    }
    plan.factors.push_back(Factor{*pm.matching, FactorKind::one_regular, FactorTag::perpendicular_matching});
    for (Factor& f : two_factorize_subset(g, complement_edges(g, *pm.matching))) {
      plan.factors.push_back(std::move(f));
    }
    return plan;
  }

  // d = 2 mod 4: need a Hamiltonian cycle or a 2-factor of even cycles.
  const CycleSearch ham = hamiltonian_cycle(g, budget);
  Factor special;
  if (ham.status == SearchStatus::found) {
    plan.plan_case = PlanCase::two_mod_4_hamiltonian;
    plan.hamiltonian_order = ham.cycle;
    special.tag = FactorTag::on_circle_hamiltonian;
    for (std::size_t i = 0; i < ham.cycle.size(); ++i) {
      special.edges.push_back(*g.edge_between(ham.cycle[i], ham.cycle[(i + 1) % ham.cycle.size()]));
    }
    std::sort(special.edges.begin(), special.edges.end());
  } else {
    const FactorSearch even = even_two_factor(g, budget);
    if (even.status == SearchStatus::found) {
      plan.plan_case = PlanCase::two_mod_4_bipartite;
      special = *even.factor;
    } else if (ham.status == SearchStatus::unknown || even.status == SearchStatus::unknown) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "search budget of " + std::to_string(budget) + " nodes exhausted");
    } else {
      throw Error(ErrorCode::NoHamiltonianOrEvenFactor,
                  "degree is 2 mod 4 and the graph has neither a Hamiltonian cycle nor an even 2-factor");
    }
  }
  plan.factors.push_back(special);
  for (Factor& f : two_factorize_subset(g, complement_edges(g, special.edges))) {
    plan.factors.push_back(std::move(f));
  }
  return plan;
}

bool plan_is_valid(const RotationGraph& g, const DecompositionPlan& plan) {
  const auto d = regular_degree(g);
  if (!d || *d != plan.degree) return false;
  std::vector<int> uses(g.edge_count(), 0);
  for (const Factor& f : plan.factors) {
    if (!is_spanning_factor(g, f)) return false;
    for (EdgeId e : f.edges) ++uses[e];
  }
  if (!std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; })) return false;

  auto count_tag = [&](FactorTag t) {
    return std::count_if(plan.factors.begin(), plan.factors.end(),
                         [t](const Factor& f) { return f.tag == t; });
  };
  auto ones = std::count_if(plan.factors.begin(), plan.factors.end(),
                            [](const Factor& f) { return f.kind == FactorKind::one_regular; });
  switch (plan.plan_case) {
    case PlanCase::div4:
      return *d % 4 == 0 && ones == 0;
    case PlanCase::odd:
      return *d % 2 == 1 && ones == 1 && count_tag(FactorTag::perpendicular_matching) == 1 &&
             plan.factors.front().kind == FactorKind::one_regular;
    case PlanCase::two_mod_4_hamiltonian: {
      if (*d % 4 != 2 || ones != 0 || count_tag(FactorTag::on_circle_hamiltonian) != 1) return false;
      const Factor& f = plan.factors.front();
      if (f.tag != FactorTag::on_circle_hamiltonian) return false;
      if (factor_cycles(g, f.edges).size() != 1) return false;
      const auto& order = plan.hamiltonian_order;
      if (static_cast<int>(order.size()) != g.vertex_count()) return false;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const auto e = g.edge_between(order[i], order[(i + 1) % order.size()]);
        if (!e || !std::binary_search(f.edges.begin(), f.edges.end(), *e)) return false;
      }
      return true;
    }
    case PlanCase::two_mod_4_bipartite: {
      if (*d % 4 != 2 || ones != 0 || count_tag(FactorTag::perpendicular_bipartite) != 1) return false;
      const Factor& f = plan.factors.front();
      if (f.tag != FactorTag::perpendicular_bipartite) return false;
      for (const auto& c : factor_cycles(g, f.edges)) {
        if (c.size() % 2 != 0) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace lombardi
