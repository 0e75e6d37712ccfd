#pragma once

namespace fuzzysched::control {

/// G(s) = gain / (s2 * s^2 + s1 * s), realised as
///   x1' = x2
///   x2' = -(s1/s2) x2 + (gain/s2) u,   y = x1.
struct PlantParams {
  double gain = 1000.0;
  double s2 = 0.5;
  double s1 = 1.0;

  double pole() const noexcept { return s1 / s2; }
  double input_gain() const noexcept { return gain / s2; }

  friend bool operator==(const PlantParams&, const PlantParams&) = default;
};

struct PlantState {
  double x1 = 0.0;  // position, m
  double x2 = 0.0;  // velocity, m/s
  double u = 0.0;   // last applied command
};

/// Exact zero-order-hold solution over `dt` seconds with constant input `u`.
/// The returned state records `u` as the applied command.
/// Throws out-of-range for negative dt or non-positive s1/s2.
PlantState plant_step(const PlantState& state, double u, double dt,
                      const PlantParams& params = {});

}  // namespace fuzzysched::control
