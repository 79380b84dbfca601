#include <benchmark/benchmark.h>

#include "mondec/decider.hpp"
#include "mondec/generators.hpp"
#include "mondec/relation_ops.hpp"

using namespace mondec;

namespace {

const Alphabet ab({"a", "b"}, "_");

Automaton random_relation(std::int64_t states) {
  RandomAutomatonOptions o;
  o.states = static_cast<std::size_t>(states);
  o.density = 0.6;
  return random_automaton(11, ab, o);
}

void BM_NotSim(benchmark::State& state) {
  Automaton r = random_relation(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_not_sim(r));
}
BENCHMARK(BM_NotSim)->DenseRange(2, 8, 2);

void BM_Decide(benchmark::State& state) {
  Automaton ns = build_not_sim(random_relation(state.range(0)));
  state.counters["not_sim_states"] = static_cast<double>(ns.num_states());
  for (auto _ : state) benchmark::DoNotOptimize(decide_binary(ns));
}
BENCHMARK(BM_Decide)->DenseRange(2, 8, 2);

void BM_Universality(benchmark::State& state) {
  RandomAutomatonOptions o;
  o.arity = 1;
  o.states = static_cast<std::size_t>(state.range(0));
  o.deterministic = false;
  o.density = 0.6;
  Automaton relation = universality_reduction(random_automaton(5, ab, o)).relation;
  for (auto _ : state) benchmark::DoNotOptimize(decide_binary(build_not_sim(relation)));
}
BENCHMARK(BM_Universality)->DenseRange(1, 5);

void BM_Dag(benchmark::State& state) {
  auto vertices = static_cast<std::size_t>(state.range(0));
  Automaton relation = dag_reduction(random_dag(3, vertices, 0.3), 0, vertices - 1).relation;
  for (auto _ : state) benchmark::DoNotOptimize(decide_binary(build_not_sim(relation)));
}
BENCHMARK(BM_Dag)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
