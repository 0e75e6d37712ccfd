#include "fuzzysched/sim/utilization.hpp"

#include <algorithm>

#include "fuzzysched/error.hpp"

namespace fuzzysched::sim {

UtilizationSample measure_utilization(std::span<const TaskWindowUsage> usage,
                                      std::span<const double> periods,
                                      double noise, Nanos window_start,
                                      Nanos window_end) {
  if (usage.size() != periods.size()) {
    throw Error(ErrorKind::kInvariant, "usage/period size mismatch");
  }
  UtilizationSample sample{window_start, window_end, 0.0, 0.0};
  for (std::size_t i = 0; i < usage.size(); ++i) {
    if (!usage[i].counted) continue;
    sample.demand += usage[i].mean_exec() / periods[i];
  }
  sample.value = std::clamp(sample.demand + noise, 0.0, 1.0);
  return sample;
}

}  // namespace fuzzysched::sim
