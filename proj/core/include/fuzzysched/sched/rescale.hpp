#pragma once

#include <span>
#include <vector>

namespace fuzzysched::sched {

/// round(value * gain) with ties away from zero, clamped to [-q_max, q_max].
int quantize(double value, double gain, int q_max) noexcept;

struct LoopPeriod {
  double period = 0.0;  // seconds, current
  double h_min = 0.0;
  double h_max = 0.0;
};

enum class Clamp { kNone, kMin, kMax };

struct RescaleDecision {
  double eta = 1.0;
  std::vector<double> periods;  // seconds, new
  std::vector<Clamp> clamps;

  bool any_clamped() const noexcept;
};

/// h <- min(h_max, max(h_min, eta * h)) for each control loop.
/// Throws out-of-range for eta <= 0.
RescaleDecision apply_periods(double eta, std::span<const LoopPeriod> loops);

/// Rescale factor that would put control demand exactly on the budget left
/// by the other tasks:
///   eta = (sum c_i / h_i) / (u_desired - u_others)
/// Throws infeasible-load when u_desired <= u_others.
double ideal_eta(std::span<const double> exec, std::span<const double> periods,
                 double u_others, double u_desired);

/// Utilization after rescaling every loop by eta (no clamping).
double predicted_utilization(std::span<const double> exec,
                             std::span<const double> periods, double eta,
                             double u_others);

/// The no-feedback baseline: periods never change.
inline constexpr double open_loop_step() noexcept { return 1.0; }

}  // namespace fuzzysched::sched
