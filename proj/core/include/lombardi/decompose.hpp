#pragma once

// Edge decompositions of regular graphs: Euler-tour halving, 2-factors,
// matchings, bipartite edge coloring and budgeted cycle searches, combined
// into a plan for drawing on one circle.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lombardi/graph.hpp"

namespace lombardi {

// ---- matching -------------------------------------------------------------

/// Maximum matching of a general graph (Edmonds' blossom algorithm), as edge
/// ids. Ties are broken by lowest vertex id.
std::vector<EdgeId> max_matching(const RotationGraph& g);

/// Tutte-Berge barrier: removing `barrier` leaves more odd components than
/// |barrier|, so no perfect matching exists.
struct TutteWitness {
  std::vector<VertexId> barrier;
  std::vector<std::vector<VertexId>> odd_components;
  int deficiency = 0;  // odd components - |barrier| = n - 2 * |max matching|
};

struct PerfectMatchingResult {
  std::optional<std::vector<EdgeId>> matching;
  std::optional<TutteWitness> witness;  // set exactly when matching is absent
};

PerfectMatchingResult perfect_matching(const RotationGraph& g);

/// Independent recount of the witness against the graph.
bool witness_certifies(const RotationGraph& g, const TutteWitness& w);

// ---- factors ----------------------------------------------------------------

enum class FactorKind { one_regular, two_regular };
enum class FactorTag { plain, on_circle_hamiltonian, perpendicular_bipartite, perpendicular_matching };

struct Factor {
  std::vector<EdgeId> edges;
  FactorKind kind = FactorKind::two_regular;
  FactorTag tag = FactorTag::plain;
};

/// True when the edges induce degree exactly 1 (or 2) at every vertex.
bool is_spanning_factor(const RotationGraph& g, const Factor& f);

/// Cycles of a 2-regular edge set, each as a closed vertex sequence starting
/// at its lowest vertex and continuing to the lower of its two neighbors.
std::vector<std::vector<VertexId>> factor_cycles(const RotationGraph& g,
                                                 const std::vector<EdgeId>& edges);

/// Alternating edges of Euler circuits. Every vertex gets exactly half its
/// degree on each side. Throws OddDegree, or UnbalancedCircuit when some
/// component has an odd number of edges.
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> euler_halving(const RotationGraph& g);

/// Splits a 2k-regular graph into k spanning 2-factors by orienting Euler
/// circuits and edge-coloring the resulting k-regular bipartite graph.
/// Throws NotEvenRegular.
std::vector<Factor> two_factorize(const RotationGraph& g);

/// Splits a d-regular bipartite graph into d perfect matchings.
/// Throws NotRegularBipartite.
std::vector<std::vector<EdgeId>> bipartite_edge_coloring(const RotationGraph& g);

/// Edge coloring of a regular bipartite multigraph given as (left, right)
/// pairs; returns the color of every edge. Used by the two routines above.
std::vector<int> regular_bipartite_coloring(int left, int right,
                                            const std::vector<std::pair<int, int>>& edges,
                                            int degree);

// ---- budgeted searches --------------------------------------------------------

enum class SearchStatus { found, absent, unknown };

inline constexpr std::int64_t kDefaultSearchBudget = 10'000'000;

struct CycleSearch {
  SearchStatus status = SearchStatus::unknown;
  std::vector<VertexId> cycle;  // vertex order, closed implicitly
  std::int64_t nodes = 0;
};

/// Exact backtracking; `absent` only when the search space was exhausted.
CycleSearch hamiltonian_cycle(const RotationGraph& g, std::int64_t budget = kDefaultSearchBudget);

struct FactorSearch {
  SearchStatus status = SearchStatus::unknown;
  std::optional<Factor> factor;
  std::int64_t nodes = 0;
};

/// Spanning 2-regular subgraph all of whose cycles are even.
FactorSearch even_two_factor(const RotationGraph& g, std::int64_t budget = kDefaultSearchBudget);

// ---- circular plan ------------------------------------------------------------

enum class PlanCase { div4, odd, two_mod_4_hamiltonian, two_mod_4_bipartite };

const char* to_string(PlanCase c);

struct DecompositionPlan {
  int degree = 0;
  PlanCase plan_case = PlanCase::div4;
  std::vector<Factor> factors;
  std::vector<VertexId> hamiltonian_order;  // set for the Hamiltonian case
};

/// Chooses factors so that the graph can be drawn on one circle. Throws
/// NotRegular, NoPerfectMatching, NoHamiltonianOrEvenFactor or
/// SearchBudgetExceeded.
DecompositionPlan circular_plan(const RotationGraph& g, std::int64_t budget = kDefaultSearchBudget);

/// Checks partition, spanning regularity and the side condition of the case.
bool plan_is_valid(const RotationGraph& g, const DecompositionPlan& plan);

}  // namespace lombardi
