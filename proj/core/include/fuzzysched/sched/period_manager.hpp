#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "fuzzysched/fuzzy/lookup_table.hpp"
#include "fuzzysched/sim/utilization.hpp"

namespace fuzzysched::sched {

enum class Mode { kOpenLoop, kIdeal, kFuzzy };

std::string_view to_string(Mode mode) noexcept;
/// Accepts "open-loop", "ideal", "fuzzy". Throws config-semantic otherwise.
Mode parse_mode(std::string_view text);

/// Everything a period manager might look at when invoked. The fuzzy
/// scheduler reads only the measurement; the ideal one reads the true
/// timing attributes instead.
struct Observation {
  double time = 0.0;  // seconds
  sim::UtilizationSample measurement;
  std::vector<double> control_exec;     // true mean execution times, s
  std::vector<double> control_periods;  // current periods, s
  double others_utilization = 0.0;      // non-control demand
};

class PeriodManager {
 public:
  virtual ~PeriodManager() = default;
  virtual Mode mode() const noexcept = 0;
  /// Period rescaling factor for this invocation.
  virtual double decide(const Observation& obs) = 0;
};

class OpenLoopManager final : public PeriodManager {
 public:
  Mode mode() const noexcept override { return Mode::kOpenLoop; }
  double decide(const Observation&) override;
};

class IdealManager final : public PeriodManager {
 public:
  explicit IdealManager(double desired_utilization)
      : desired_(desired_utilization) {}
  Mode mode() const noexcept override { return Mode::kIdeal; }
  double decide(const Observation& obs) override;

 private:
  double desired_;
};

struct FfsParams {
  double desired_utilization = 0.85;
  double ge = 20.0;         // e gain: 6 / 0.3
  double gec = 20.0;        // ec gain: 6 / 0.3
  double grf = 1.0 / 14.0;  // output gain
  double period = 0.020;    // invocation interval, s

  friend bool operator==(const FfsParams&, const FfsParams&) = default;
};

/// Requires 0 < U_R < 1, positive gains and grf * 7 <= 0.5; throws
/// config-semantic otherwise.
void validate(const FfsParams& params);

/// One fuzzy scheduler step, kept whole for tracing and tests.
struct FfsStep {
  double e = 0.0;
  double ec = 0.0;
  int e_q = 0;
  int ec_q = 0;
  int q_out = 0;
  double eta = 1.0;
};

/// Runtime side of the fuzzy feedback scheduler: quantize (e, ec), read the
/// table, scale the output level. eta = 1 + grf * q_out, so level 0 leaves
/// periods alone and the 15 output levels span [0.5, 1.5].
class FuzzyScheduler {
 public:
  explicit FuzzyScheduler(FfsParams params,
                          const fuzzy::LookupTable& table = fuzzy::golden_lookup_table());

  /// `u_hat` must lie in [0, 1].
  FfsStep step(double u_hat);

  const FfsParams& params() const noexcept { return params_; }
  double previous_error() const noexcept { return e_prev_; }

 private:
  FfsParams params_;
  const fuzzy::LookupTable* table_;
  double e_prev_ = 0.0;
};

class FuzzyManager final : public PeriodManager {
 public:
  explicit FuzzyManager(FfsParams params,
                        const fuzzy::LookupTable& table = fuzzy::golden_lookup_table())
      : scheduler_(params, table) {}
  Mode mode() const noexcept override { return Mode::kFuzzy; }
  double decide(const Observation& obs) override;
  const FfsStep& last_step() const noexcept { return last_; }

 private:
  FuzzyScheduler scheduler_;
  FfsStep last_;
};

std::unique_ptr<PeriodManager> make_manager(Mode mode, const FfsParams& params);

}  // namespace fuzzysched::sched
