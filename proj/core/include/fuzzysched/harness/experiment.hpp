#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysched/harness/scenario.hpp"
#include "fuzzysched/harness/summary.hpp"
#include "fuzzysched/harness/trace.hpp"
#include "fuzzysched/sched/period_manager.hpp"
#include "fuzzysched/sched/rescale.hpp"
#include "fuzzysched/sim/kernel.hpp"

namespace fuzzysched::harness {

/// What happened at one feedback-scheduler invocation.
struct Invocation {
  double time = 0.0;
  sim::UtilizationSample sample;
  double eta = 1.0;
  /// Utilization the true timing attributes would give under eta*h, before
  /// the period bounds are applied.
  double predicted_utilization = 0.0;
  sched::RescaleDecision decision;
  std::optional<sched::FfsStep> ffs;
};

struct RunOptions {
  /// Keep the kernel's job records and execution slices in the result.
  bool keep_schedule = false;
};

struct RunResult {
  std::vector<std::string> task_names;  // scenario tasks, scheduler excluded
  std::vector<TraceRecord> trace;
  std::vector<Invocation> invocations;
  RunSummary summary;
  std::vector<sim::JobRecord> jobs;  // only with keep_schedule
  std::vector<sim::ExecSlice> slices;
  std::vector<int> priorities;  // kernel task order, scheduler last
};

/// Runs the scenario to its horizon with the scenario's scheduler mode.
/// Deterministic in (config, seed). Throws infeasible-load from the ideal
/// manager.
RunResult run_experiment(const ScenarioConfig& config, std::uint64_t seed,
                         const RunOptions& options = {});

/// Writes trace.csv and summary.txt into `dir` (created if missing), plus
/// table_diff.txt when a report is supplied. Throws io with the path.
void emit_traces(const RunResult& result, const std::filesystem::path& dir,
                 const std::optional<std::string>& table_diff = std::nullopt);

}  // namespace fuzzysched::harness
