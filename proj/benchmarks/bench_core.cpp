// Microbenchmarks for the numerical hot paths: factorizations, the two
// composition routes, and frame/graph conversions.  Inputs are seeded so
// successive runs measure identical work.

#include <benchmark/benchmark.h>

#include "lagcat/composition.hpp"
#include "lagcat/lagrangian.hpp"
#include "lagcat/linalg.hpp"
#include "lagcat/random.hpp"

namespace {

using namespace lagcat;

Field field_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Field::Real : Field::Complex;
}

void set_field_label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "real" : "complex");
}

void args_dims_fields(benchmark::internal::Benchmark* b) {
  for (long f : {0L, 1L})
    for (long n : {4L, 8L, 16L, 32L}) b->Args({n, f});
}

void bm_svd(benchmark::State& state) {
  Rng rng(1);
  const Index n = state.range(0);
  const Matrix a = gaussian_matrix(rng, n, n, field_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(svd(a));
  set_field_label(state);
}
BENCHMARK(bm_svd)->Apply(args_dims_fields);

void bm_generalized_inverse(benchmark::State& state) {
  Rng rng(2);
  const Index n = state.range(0);
  const Matrix a = gaussian_matrix(rng, n, n, field_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(generalized_inverse(a));
  set_field_label(state);
}
BENCHMARK(bm_generalized_inverse)->Apply(args_dims_fields);

struct ComposablePair {
  Correspondence a;
  Correspondence b;
};

ComposablePair seeded_pair(Index n, Field f) {
  Rng rng(3);
  const SuperSpace v(n, n, f);
  ComposablePair p{random_general_position(rng, v, v), random_general_position(rng, v, v)};
  return p;
}

void bm_compose_formula(benchmark::State& state) {
  const auto p = seeded_pair(state.range(0), field_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(compose_formula(p.a, p.b));
  set_field_label(state);
}
BENCHMARK(bm_compose_formula)->Apply(args_dims_fields);

void bm_compose_bruteforce(benchmark::State& state) {
  const auto p = seeded_pair(state.range(0), field_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(compose_bruteforce(p.a, p.b));
  set_field_label(state);
}
BENCHMARK(bm_compose_bruteforce)->Apply(args_dims_fields);

void bm_to_graph_isometry(benchmark::State& state) {
  Rng rng(4);
  const Index n = state.range(0);
  const SuperSpace v(n, n, field_of(state));
  const Frame frame = from_graph_isometry(GraphIsometry(v, haar_unitary(rng, n, v.field())));
  for (auto _ : state) benchmark::DoNotOptimize(to_graph_isometry(v, frame));
  set_field_label(state);
}
BENCHMARK(bm_to_graph_isometry)->Apply(args_dims_fields);

}  // namespace

BENCHMARK_MAIN();
