#include <benchmark/benchmark.h>

#include <random>

#include "bracketlab/homology.hpp"
#include "bracketlab/json_io.hpp"
#include "bracketlab/corpus.hpp"

using namespace bracketlab;

namespace {

json corpus(const std::string& path) { return parse_json(EmbeddedSource{}.read(path), path); }

OrientedDiagram diagram(const std::string& name) { return diagram_from_json(corpus("diagrams/" + name + ".json")); }

Bracket bracket(const std::string& name) { return make_bracket(bracket_data_from_json(corpus("brackets/" + name + ".json"))); }

// Closure of (s1 s2^-1)^k on three strands: 2k crossings.
OrientedDiagram alternating_braid(int k) {
  std::vector<int> word;
  for (int i = 0; i < k; ++i) {
    word.push_back(1);
    word.push_back(-2);
  }
  return braid_closure(3, word);
}

}  // namespace

static void BM_Colorings(benchmark::State& state) {
  const auto t = biquandle_tables_from_json(corpus("biquandles/three_element.json"));
  const Biquandle X(t.under, t.over);
  const auto d = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(X, d));
}
BENCHMARK(BM_Colorings)->Arg(2)->Arg(4)->Arg(8);

static void BM_BracketInvariant(benchmark::State& state) {
  const auto beta = bracket("gf8_flip");
  const auto d = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_invariant(beta, d));
}
BENCHMARK(BM_BracketInvariant)->Arg(2)->Arg(3)->Arg(4);

static void BM_Khovanov(benchmark::State& state) {
  const auto d = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(khovanov_classical(d));
}
BENCHMARK(BM_Khovanov)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BracketHomology(benchmark::State& state) {
  const auto beta = bracket("z9_flip");
  const auto d = diagram("figure_eight");
  const auto f = enumerate_colorings(beta.biquandle(), d).front();
  for (auto _ : state) benchmark::DoNotOptimize(bh_invariant(beta, d, f));
}
BENCHMARK(BM_BracketHomology)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (auto& row : m) {
    for (auto& v : row) v = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(16)->Arg(64);

static void BM_CheckAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_all(EmbeddedSource{}));
}
BENCHMARK(BM_CheckAll)->Unit(benchmark::kMillisecond)->Iterations(1);
