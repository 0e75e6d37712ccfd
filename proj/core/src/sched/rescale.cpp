#include "fuzzysched/sched/rescale.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::sched {

int quantize(double value, double gain, int q_max) noexcept {
  const double scaled = std::round(value * gain);
  const double limit = static_cast<double>(q_max);
  return static_cast<int>(std::clamp(scaled, -limit, limit));
}

bool RescaleDecision::any_clamped() const noexcept {
  return std::any_of(clamps.begin(), clamps.end(),
                     [](Clamp c) { return c != Clamp::kNone; });
}

RescaleDecision apply_periods(double eta, std::span<const LoopPeriod> loops) {
  if (!(eta > 0.0)) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("rescale factor must be > 0, got {}", eta));
  }
  RescaleDecision d;
  d.eta = eta;
  d.periods.reserve(loops.size());
  d.clamps.reserve(loops.size());
  for (const LoopPeriod& loop : loops) {
    const double wanted = eta * loop.period;
    if (wanted > loop.h_max) {
      d.periods.push_back(loop.h_max);
      d.clamps.push_back(Clamp::kMax);
    } else if (wanted < loop.h_min) {
      d.periods.push_back(loop.h_min);
      d.clamps.push_back(Clamp::kMin);
    } else {
      d.periods.push_back(wanted);
      d.clamps.push_back(Clamp::kNone);
    }
  }
  return d;
}

namespace {

double demand(std::span<const double> exec, std::span<const double> periods) {
  if (exec.size() != periods.size()) {
    throw Error(ErrorKind::kInvariant, "exec/period size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < exec.size(); ++i) {
    if (!(exec[i] > 0.0) || !(periods[i] > 0.0)) {
      throw Error(ErrorKind::kOutOfRange,
                  "execution times and periods must be > 0");
    }
    sum += exec[i] / periods[i];
  }
  return sum;
}

}  // namespace

double ideal_eta(std::span<const double> exec, std::span<const double> periods,
                 double u_others, double u_desired) {
  if (!(u_desired > u_others)) {
    throw Error(ErrorKind::kInfeasibleLoad,
                fmt::format("control demand cannot fit: desired utilization {} "
                            "<= non-control utilization {}",
                            u_desired, u_others));
  }
  return demand(exec, periods) / (u_desired - u_others);
}

double predicted_utilization(std::span<const double> exec,
                             std::span<const double> periods, double eta,
                             double u_others) {
  std::vector<double> rescaled(periods.begin(), periods.end());
  for (double& h : rescaled) h *= eta;
  return demand(exec, rescaled) + u_others;
}

}  // namespace fuzzysched::sched
