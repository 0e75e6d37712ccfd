#include "fuzzysched/sim/task.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::sim {

std::string_view to_string(TaskKind kind) noexcept {
  switch (kind) {
    case TaskKind::kControl: return "control";
    case TaskKind::kNonControl: return "non-control";
    case TaskKind::kScheduler: return "scheduler";
  }
  return "?";
}

void validate(const TaskSpec& task) {
  auto fail = [&](std::string_view what) {
    throw Error(ErrorKind::kConfigSemantic,
                fmt::format("task '{}': {}", task.name, what));
  };
  if (task.name.empty()) fail("name must be non-empty");
  if (!(task.period > 0.0)) fail("period must be > 0");
  if (!(task.mean_exec > 0.0)) fail("mean execution time must be > 0");
  if (task.offset < 0.0) fail("offset must be >= 0");
  if (task.kind == TaskKind::kControl) {
    if (!(task.h_min > 0.0)) fail("h_min must be > 0");
    if (!(task.h_min <= task.period && task.period <= task.h_max)) {
      fail("period must satisfy h_min <= period <= h_max");
    }
  }
}

double sample_execution_time(double mean, double epsilon) noexcept {
  return std::max((1.0 + epsilon) * mean, kExecFloorFraction * mean);
}

double sample_execution_time(double mean, RandomStream& noise, double stddev) {
  return sample_execution_time(mean, noise.normal(stddev));
}

}  // namespace fuzzysched::sim
