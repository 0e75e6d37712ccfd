#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysched/control/pid.hpp"
#include "fuzzysched/control/plant.hpp"
#include "fuzzysched/control/reference.hpp"
#include "fuzzysched/sched/period_manager.hpp"
#include "fuzzysched/sim/task.hpp"

namespace fuzzysched::harness {

enum class Axis { kX, kY };

struct ScenarioTask {
  sim::TaskSpec spec;
  std::optional<Axis> axis;  // set for control tasks

  friend bool operator==(const ScenarioTask&, const ScenarioTask&) = default;
};

/// Mean execution times over [start, end), one entry per task in
/// ScenarioConfig::tasks order. The last segment also covers its end point.
struct ExecSegment {
  double start = 0.0;
  double end = 0.0;
  std::vector<double> means;

  friend bool operator==(const ExecSegment&, const ExecSegment&) = default;
};

struct SchedulerConfig {
  sched::Mode mode = sched::Mode::kFuzzy;
  sched::FfsParams ffs;
  double exec_time = 1e-4;  // s, fixed cost of each invocation
  int priority = 0;

  friend bool operator==(const SchedulerConfig&, const SchedulerConfig&) = default;
};

struct NoiseConfig {
  double exec_variance = 0.01;  // variance of epsilon
  double r = 0.0;               // std-dev of the utilization noise

  friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

struct ScenarioConfig {
  std::vector<ScenarioTask> tasks;
  std::vector<ExecSegment> schedule;
  control::PlantParams plant;
  control::PidGains pid;
  control::ReferencePath reference;
  SchedulerConfig scheduler;
  NoiseConfig noise;
  double horizon = 4.0;
  std::uint64_t seed = 1;

  /// Mean execution time of `task` at time `t` (seconds).
  double mean_exec(std::size_t task, double t) const;
  std::optional<std::size_t> find_task(std::string_view name) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// The mobile-robot case study: two control loops (x on tau1, y on tau2), one
/// non-control task tau3, the four-segment execution-time schedule, a 4 s
/// half-circle target, U_R = 0.85 and T_FS = 20 ms.
ScenarioConfig default_scenario();

/// Checks every cross-field invariant and fills derived fields (each task's
/// mean_exec from the first schedule segment). Throws config-semantic.
void validate(ScenarioConfig& config);

/// Parses a YAML scenario; absent keys keep their default_scenario() values.
/// Throws ConfigSyntaxError (with line/column) or config-semantic.
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Canonical YAML rendering; parse_scenario(to_yaml(c)) == c.
std::string to_yaml(const ScenarioConfig& config);

}  // namespace fuzzysched::harness
