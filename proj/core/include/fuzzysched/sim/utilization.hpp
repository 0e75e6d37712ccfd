#pragma once

#include <span>

#include "fuzzysched/sim/time.hpp"

namespace fuzzysched::sim {

/// What one task did during a monitoring window.
struct TaskWindowUsage {
  int jobs_released = 0;
  double exec_sum = 0.0;   // seconds, sampled execution times of those jobs
  double last_exec = 0.0;  // most recent sampled execution time, any window
  Nanos busy{0};           // CPU time actually consumed inside the window
  bool counted = true;     // false for the scheduler task

  /// Mean sampled execution time of jobs released in the window, falling back
  /// to the most recent sample when the task released nothing.
  double mean_exec() const noexcept {
    return jobs_released > 0 ? exec_sum / jobs_released : last_exec;
  }
};

struct UtilizationSample {
  Nanos window_start{0};
  Nanos window_end{0};
  double demand = 0.0;  // sum of c/h before noise and clamping
  double value = 0.0;   // reported measurement, clamped to [0, 1]
};

/// U_hat = clamp(sum over counted tasks of mean_exec / period + noise, 0, 1).
/// `periods` runs parallel to `usage`, in seconds.
UtilizationSample measure_utilization(std::span<const TaskWindowUsage> usage,
                                      std::span<const double> periods,
                                      double noise, Nanos window_start,
                                      Nanos window_end);

}  // namespace fuzzysched::sim
