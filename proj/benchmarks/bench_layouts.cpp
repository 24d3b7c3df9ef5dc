#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "lombardi/circular_layout.hpp"
#include "lombardi/decompose.hpp"
#include "lombardi/degenerate_layout.hpp"
#include "lombardi/document.hpp"
#include "lombardi/halin_layout.hpp"
#include "lombardi/spirograph.hpp"
#include "lombardi/verify.hpp"

using namespace lombardi;

namespace {

std::string corpus_text(const std::string& rel) { return read_text_file(std::string(LOMBARDI_CORPUS_DIR) + "/" + rel); }

const char* const kCircular[] = {"wagner", "k44", "paley13", "petersen", "nauru"};

// spine with one leaf per inner node and two per end: every internal node has degree 3
RotationGraph caterpillar_tree(int spine) {
  std::vector<Edge> edges;
  int next = spine;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < spine; ++i) {
    const int legs = (i == 0 || i + 1 == spine) ? 2 : 1;
    for (int k = 0; k < legs; ++k) edges.push_back({i, next++});
  }
  return RotationGraph(next, std::move(edges));
}

RotationGraph two_degenerate(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int a = pick(rng);
    edges.push_back({a, v});
    if (v >= 2) {
      int b = pick(rng);
      while (b == a) b = pick(rng);
      edges.push_back({b, v});
    }
  }
  return RotationGraph(n, std::move(edges));
}

}  // namespace

static void BM_CircularLayout(benchmark::State& state) {
  const RotationGraph g = load_graph(corpus_text(std::string("graphs/") + kCircular[state.range(0)] + ".json"));
  for (auto _ : state) benchmark::DoNotOptimize(draw_circular(g, circular_plan(g)));
  state.SetLabel(kCircular[state.range(0)]);
}
BENCHMARK(BM_CircularLayout)->DenseRange(0, 4);

static void BM_PerfectMatching(benchmark::State& state) {
  const RotationGraph g = load_graph(corpus_text("graphs/nauru.json"));
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching(g));
}
BENCHMARK(BM_PerfectMatching);

static void BM_TwoDegenerate(benchmark::State& state) {
  const RotationGraph g = two_degenerate(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(draw_2degenerate(g));
}
BENCHMARK(BM_TwoDegenerate)->Arg(10)->Arg(20)->Arg(40);

static void BM_Halin(benchmark::State& state) {
  const HalinGraph h = halin_from_tree(caterpillar_tree(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(draw_halin(h));
}
BENCHMARK(BM_Halin)->Arg(4)->Arg(16)->Arg(64);

static void BM_Spirograph(benchmark::State& state) {
  const SpiroSpec s = parse_spiro_spec(corpus_text("spiro/f40.json"));
  for (auto _ : state) benchmark::DoNotOptimize(draw_spirograph(s));
}
BENCHMARK(BM_Spirograph);

static void BM_Verify(benchmark::State& state) {
  const RotationGraph g = load_graph(corpus_text("graphs/paley13.json"));
  const Drawing d = draw_circular(g, circular_plan(g));
  for (auto _ : state) benchmark::DoNotOptimize(verify_drawing(d));
}
BENCHMARK(BM_Verify);

BENCHMARK_MAIN();
