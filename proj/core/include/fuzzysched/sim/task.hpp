#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fuzzysched/sim/random.hpp"
#include "fuzzysched/sim/time.hpp"

namespace fuzzysched::sim {

enum class TaskKind { kControl, kNonControl, kScheduler };

std::string_view to_string(TaskKind kind) noexcept;

/// Periodic task parameters. Lower priority number = higher priority.
/// Only control tasks may change period at runtime, within [h_min, h_max].
struct TaskSpec {
  std::string name;
  TaskKind kind = TaskKind::kNonControl;
  double period = 0.0;     // seconds
  double mean_exec = 0.0;  // seconds
  int priority = 0;
  double h_min = 0.0;  // seconds, control tasks only
  double h_max = 0.0;  // seconds, control tasks only
  double offset = 0.0;  // first release, seconds

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

/// Throws config-semantic naming the violated invariant.
void validate(const TaskSpec& task);

/// Per-release bookkeeping.
struct JobRecord {
  std::size_t task = 0;
  std::uint64_t id = 0;
  Nanos release{0};
  Nanos deadline{0};
  Nanos exec{0};
  Nanos remaining{0};
  double period = 0.0;  // period in force at release, seconds
  std::optional<Nanos> start;
  std::optional<Nanos> finish;
  int preemptions = 0;
  bool missed = false;
};

/// Floor applied to sampled execution times, as a fraction of the mean.
inline constexpr double kExecFloorFraction = 0.01;

/// (1 + epsilon) * mean, floored at kExecFloorFraction * mean.
double sample_execution_time(double mean, double epsilon) noexcept;
/// Draws epsilon ~ N(0, stddev^2) from `noise`.
double sample_execution_time(double mean, RandomStream& noise, double stddev);

}  // namespace fuzzysched::sim
