#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fuzzysched/harness/trace.hpp"

namespace fuzzysched::harness {

struct RunSummary {
  std::vector<std::string> task_names;
  double mean_error = 0.0;  // time-weighted, m
  double max_error = 0.0;
  double mean_u_hat = 0.0;
  double mean_u_hat_final = 0.0;  // last second of the trace
  int u_samples = 0;
  std::vector<std::int64_t> misses;
  double eta_min = 0.0;
  double eta_max = 0.0;
  double wall_seconds = 0.0;  // not derived from the trace

  /// Field-wise equality of everything the trace determines.
  bool same_statistics(const RunSummary& other) const noexcept;
};

/// Tracking error is held constant from each record to the next and averaged
/// over [first, last] record time. Each utilization sample is weighted by the
/// time since the previous sample (or the first record). Miss counts come from
/// the last record. Throws out-of-range on an empty trace.
RunSummary summarize(std::span<const TraceRecord> trace,
                     std::vector<std::string> task_names);

void write_summary(std::ostream& out, const RunSummary& summary);

/// Error trend over the trailing `window` seconds, split into `bins` equal
/// parts. `monotone_growth` is set when the per-bin maximum error never
/// decreases and the last bin is more than twice the first.
struct ErrorTrend {
  std::vector<double> bin_max;
  bool monotone_growth = false;
};

ErrorTrend final_error_trend(std::span<const TraceRecord> trace,
                             double window = 1.0, int bins = 10);

}  // namespace fuzzysched::harness
