#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "fuzzysched/harness/scenario.hpp"
#include "fuzzysched/harness/summary.hpp"

namespace fuzzysched::harness {

/// Utilization-noise standard deviations swept by default.
inline constexpr std::array<double, 4> kNoiseLevels{0.0, 0.02, 0.05, 0.1};

/// Largest tracking error (m) a run may show and still count as stable.
inline constexpr double kStableErrorBound = 0.1;

struct StabilityVerdict {
  bool bounded = false;
  bool growing = false;
  bool stable() const noexcept { return bounded && !growing; }
};

/// Bounded: every error sample is finite and at most `bound`. Growing: the
/// final second shows monotone error growth (see final_error_trend).
StabilityVerdict assess_stability(std::span<const TraceRecord> trace,
                                  double bound = kStableErrorBound);

struct SweepPoint {
  double r = 0.0;
  std::uint64_t seed = 0;
  RunSummary summary;
  StabilityVerdict verdict;
  bool stable = false;
};

/// Runs `config` once per (r, seed) with seeds 1..seeds. With `out`, each
/// run's files go to out/r<r>_seed<seed>/ and the table to out/sweep.csv.
std::vector<SweepPoint> run_noise_sweep(const ScenarioConfig& config,
                                        std::span<const double> levels, int seeds,
                                        const std::optional<std::filesystem::path>& out);

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points);

}  // namespace fuzzysched::harness
