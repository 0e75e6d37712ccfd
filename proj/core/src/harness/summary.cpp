#include "fuzzysched/harness/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::harness {

bool RunSummary::same_statistics(const RunSummary& o) const noexcept {
  return task_names == o.task_names && mean_error == o.mean_error &&
         max_error == o.max_error && mean_u_hat == o.mean_u_hat &&
         mean_u_hat_final == o.mean_u_hat_final && u_samples == o.u_samples &&
         misses == o.misses && eta_min == o.eta_min && eta_max == o.eta_max;
}

RunSummary summarize(std::span<const TraceRecord> trace,
                     std::vector<std::string> task_names) {
  if (trace.empty()) throw Error(ErrorKind::kOutOfRange, "cannot summarize an empty trace");

  RunSummary s;
  s.task_names = std::move(task_names);

  const double t0 = trace.front().time;
  const double t_end = trace.back().time;
  const double final_from = t_end - 1.0;

  double error_area = 0.0;
  double u_sum = 0.0, u_weight = 0.0;
  double uf_sum = 0.0, uf_weight = 0.0;
  int uf_count = 0;
  double last_sample_time = t0;
  double eta_min = std::numeric_limits<double>::infinity();
  double eta_max = -eta_min;

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceRecord& r = trace[i];
    s.max_error = std::max(s.max_error, r.error);
    if (i + 1 < trace.size()) error_area += r.error * (trace[i + 1].time - r.time);

    if (r.u_hat) {
      const double w = r.time - last_sample_time;
      last_sample_time = r.time;
      u_sum += *r.u_hat * w;
      u_weight += w;
      ++s.u_samples;
      s.mean_u_hat += *r.u_hat;  // plain mean, used when all weights are zero
      if (r.time > final_from) {
        uf_sum += *r.u_hat * w;
        uf_weight += w;
        s.mean_u_hat_final += *r.u_hat;
        ++uf_count;
      }
    }
    if (r.eta) {
      eta_min = std::min(eta_min, *r.eta);
      eta_max = std::max(eta_max, *r.eta);
    }
  }

  s.mean_error = t_end > t0 ? error_area / (t_end - t0) : trace.front().error;
  if (s.u_samples > 0) {
    s.mean_u_hat = u_weight > 0.0 ? u_sum / u_weight : s.mean_u_hat / s.u_samples;
  }
  if (uf_count > 0) {
    s.mean_u_hat_final =
        uf_weight > 0.0 ? uf_sum / uf_weight : s.mean_u_hat_final / uf_count;
  }
  s.eta_min = std::isfinite(eta_min) ? eta_min : 1.0;
  s.eta_max = std::isfinite(eta_max) ? eta_max : 1.0;
  s.misses = trace.back().misses;
  return s;
}

void write_summary(std::ostream& out, const RunSummary& s) {
  out << fmt::format("mean_error_m {}\n", s.mean_error)
      << fmt::format("max_error_m {}\n", s.max_error)
      << fmt::format("mean_u_hat {}\n", s.mean_u_hat)
      << fmt::format("mean_u_hat_final_1s {}\n", s.mean_u_hat_final)
      << fmt::format("u_samples {}\n", s.u_samples)
      << fmt::format("eta_min {}\n", s.eta_min)
      << fmt::format("eta_max {}\n", s.eta_max);
  for (std::size_t i = 0; i < s.task_names.size() && i < s.misses.size(); ++i) {
    out << fmt::format("misses_{} {}\n", s.task_names[i], s.misses[i]);
  }
  out << fmt::format("wall_seconds {:.6f}\n", s.wall_seconds);
}

ErrorTrend final_error_trend(std::span<const TraceRecord> trace, double window,
                             int bins) {
  ErrorTrend trend;
  if (trace.empty() || bins <= 0 || !(window > 0.0)) return trend;

  const double t_end = trace.back().time;
  const double from = t_end - window;
  const double width = window / bins;
  trend.bin_max.assign(static_cast<std::size_t>(bins), 0.0);
  for (const TraceRecord& r : trace) {
    if (r.time < from) continue;
    auto b = static_cast<int>((r.time - from) / width);
    b = std::clamp(b, 0, bins - 1);
    auto& slot = trend.bin_max[static_cast<std::size_t>(b)];
    slot = std::max(slot, r.error);
  }

  bool non_decreasing = true;
  for (std::size_t i = 1; i < trend.bin_max.size(); ++i) {
    if (trend.bin_max[i] < trend.bin_max[i - 1]) non_decreasing = false;
  }
  trend.monotone_growth =
      non_decreasing && trend.bin_max.back() > 2.0 * trend.bin_max.front();
  return trend;
}

}  // namespace fuzzysched::harness
