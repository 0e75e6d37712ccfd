#include "fuzzysched/harness/sweep.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"
#include "fuzzysched/harness/experiment.hpp"

namespace fuzzysched::harness {

StabilityVerdict assess_stability(std::span<const TraceRecord> trace, double bound) {
  StabilityVerdict v;
  v.bounded = !trace.empty();
  for (const TraceRecord& r : trace) {
    if (!std::isfinite(r.error) || r.error > bound) v.bounded = false;
  }
  v.growing = final_error_trend(trace).monotone_growth;
  return v;
}

std::vector<SweepPoint> run_noise_sweep(const ScenarioConfig& config,
                                        std::span<const double> levels, int seeds,
                                        const std::optional<std::filesystem::path>& out) {
  std::vector<SweepPoint> points;
  for (double r : levels) {
    ScenarioConfig c = config;
    c.noise.r = r;
    for (int s = 1; s <= seeds; ++s) {
      const auto seed = static_cast<std::uint64_t>(s);
      const RunResult result = run_experiment(c, seed);
      SweepPoint p;
      p.r = r;
      p.seed = seed;
      p.summary = result.summary;
      p.verdict = assess_stability(result.trace);
      p.stable = p.verdict.stable();
      if (out) emit_traces(result, *out / fmt::format("r{}_seed{}", r, seed));
      points.push_back(std::move(p));
    }
  }
  if (out) {
    const auto path = *out / "sweep.csv";
    std::ofstream file(path, std::ios::binary);
    write_sweep_csv(file, points);
    if (!file) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path.string()));
  }
  return points;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points) {
  out << "r,seed,mean_error_m,max_error_m,mean_u_hat_final,eta_min,eta_max,bounded,"
         "growing,stable\n";
  for (const SweepPoint& p : points) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", p.r, p.seed,
                       p.summary.mean_error, p.summary.max_error,
                       p.summary.mean_u_hat_final, p.summary.eta_min,
                       p.summary.eta_max, int(p.verdict.bounded),
                       int(p.verdict.growing), int(p.stable));
  }
}

}  // namespace fuzzysched::harness
