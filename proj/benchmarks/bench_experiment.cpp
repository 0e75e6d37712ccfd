#include <benchmark/benchmark.h>

#include "fuzzysched/harness/experiment.hpp"
#include "fuzzysched/harness/scenario.hpp"

using namespace fuzzysched;

namespace {

void BM_RunExperiment(benchmark::State& state) {
  auto c = harness::default_scenario();
  c.scheduler.mode = static_cast<sched::Mode>(state.range(0));
  c.noise.r = 0.1;
  harness::validate(c);
  state.SetLabel(std::string(sched::to_string(c.scheduler.mode)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(harness::run_experiment(c, 1));
  }
}
BENCHMARK(BM_RunExperiment)
    ->Arg(static_cast<int>(sched::Mode::kOpenLoop))
    ->Arg(static_cast<int>(sched::Mode::kIdeal))
    ->Arg(static_cast<int>(sched::Mode::kFuzzy))
    ->Unit(benchmark::kMillisecond);

}  // namespace
