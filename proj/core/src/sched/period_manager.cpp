#include "fuzzysched/sched/period_manager.hpp"

#include <fmt/format.h>

#include "fuzzysched/error.hpp"
#include "fuzzysched/sched/rescale.hpp"

namespace fuzzysched::sched {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::kOpenLoop: return "open-loop";
    case Mode::kIdeal: return "ideal";
    case Mode::kFuzzy: return "fuzzy";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "open-loop") return Mode::kOpenLoop;
  if (text == "ideal") return Mode::kIdeal;
  if (text == "fuzzy") return Mode::kFuzzy;
  throw Error(ErrorKind::kConfigSemantic,
              fmt::format("unknown scheduler mode '{}' (expected open-loop, "
                          "ideal or fuzzy)",
                          text));
}

double OpenLoopManager::decide(const Observation&) { return open_loop_step(); }

double IdealManager::decide(const Observation& obs) {
  return ideal_eta(obs.control_exec, obs.control_periods,
                   obs.others_utilization, desired_);
}

void validate(const FfsParams& p) {
  auto fail = [](std::string_view what) {
    throw Error(ErrorKind::kConfigSemantic,
                fmt::format("fuzzy scheduler: {}", what));
  };
  if (!(p.desired_utilization > 0.0 && p.desired_utilization < 1.0)) {
    fail("desired utilization must lie in (0, 1)");
  }
  if (!(p.ge > 0.0 && p.gec > 0.0 && p.grf > 0.0)) fail("gains must be > 0");
  if (p.grf * fuzzy::LookupTable::kOutputHalfWidth > 0.5 + 1e-12) {
    fail("grf * 7 must not exceed 0.5");
  }
  if (!(p.period > 0.0)) fail("invocation period must be > 0");
}

FuzzyScheduler::FuzzyScheduler(FfsParams params, const fuzzy::LookupTable& table)
    : params_(params), table_(&table) {
  validate(params_);
}

FfsStep FuzzyScheduler::step(double u_hat) {
  if (!(u_hat >= 0.0 && u_hat <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("utilization sample {} outside [0, 1]", u_hat));
  }
  constexpr int kQ = fuzzy::LookupTable::kInputHalfWidth;
  FfsStep s;
  s.e = params_.desired_utilization - u_hat;
  s.ec = s.e - e_prev_;
  s.e_q = quantize(s.e, params_.ge, kQ);
  s.ec_q = quantize(s.ec, params_.gec, kQ);
  s.q_out = fuzzy::lookup(*table_, s.e_q, s.ec_q);
  s.eta = 1.0 + params_.grf * s.q_out;
  e_prev_ = s.e;
  return s;
}

double FuzzyManager::decide(const Observation& obs) {
  last_ = scheduler_.step(obs.measurement.value);
  return last_.eta;
}

std::unique_ptr<PeriodManager> make_manager(Mode mode, const FfsParams& params) {
  switch (mode) {
    case Mode::kOpenLoop: return std::make_unique<OpenLoopManager>();
    case Mode::kIdeal:
      return std::make_unique<IdealManager>(params.desired_utilization);
    case Mode::kFuzzy: return std::make_unique<FuzzyManager>(params);
  }
  throw Error(ErrorKind::kInvariant, "unhandled scheduler mode");
}

}  // namespace fuzzysched::sched
