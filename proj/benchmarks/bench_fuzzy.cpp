#include <benchmark/benchmark.h>

#include <vector>

#include "fuzzysched/fuzzy/inference.hpp"
#include "fuzzysched/fuzzy/lookup_table.hpp"
#include "fuzzysched/fuzzy/membership.hpp"
#include "fuzzysched/fuzzy/rules.hpp"
#include "fuzzysched/sched/period_manager.hpp"
#include "fuzzysched/sched/rescale.hpp"
#include "fuzzysched/sim/random.hpp"

using namespace fuzzysched;

namespace {

std::vector<double> utilization_samples() {
  auto rng = sim::RandomStream::named(1, "bench");
  std::vector<double> u(1024);
  for (double& x : u) x = 0.6 + 0.5 * rng.uniform();
  for (double& x : u) x = x > 1.0 ? 1.0 : x;
  return u;
}

void BM_FfsStepLookup(benchmark::State& state) {
  const auto u = utilization_samples();
  sched::FuzzyScheduler ffs(sched::FfsParams{});
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ffs.step(u[k++ & 1023]));
  }
}
BENCHMARK(BM_FfsStepLookup);

// The same decision computed by running inference at every step.
void BM_FfsStepOnline(benchmark::State& state) {
  const auto u = utilization_samples();
  const auto rules = fuzzy::utilization_rules();
  const auto in = fuzzy::default_input_family();
  const auto out = fuzzy::default_output_family();
  const sched::FfsParams p;
  double e_prev = 0.0;
  std::size_t k = 0;
  for (auto _ : state) {
    const double e = p.desired_utilization - u[k++ & 1023];
    const int eq = sched::quantize(e, p.ge, 6);
    const int ecq = sched::quantize(e - e_prev, p.gec, 6);
    e_prev = e;
    const auto agg = fuzzy::infer(fuzzy::fuzzify(eq, in), fuzzy::fuzzify(ecq, in), rules, out);
    benchmark::DoNotOptimize(1.0 + p.grf * fuzzy::round_half_away(fuzzy::defuzzify_centroid(agg)));
  }
}
BENCHMARK(BM_FfsStepOnline);

void BM_CompileTable(benchmark::State& state) {
  const auto rules = fuzzy::utilization_rules();
  const auto in = fuzzy::default_input_family();
  const auto out = fuzzy::default_output_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzy::compile_lookup_table(rules, in, out));
  }
}
BENCHMARK(BM_CompileTable);

}  // namespace
