#pragma once

namespace fuzzysched::control {

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double n = 10.0;  // derivative filter: Tf = kd / (kp * n)

  friend bool operator==(const PidGains&, const PidGains&) = default;
};

/// Discrete positional PID.
///
///   I(k) = I(k-1) + ki * h * e(k)
///   D(k) = Tf/(Tf+h) * D(k-1) - kd/(Tf+h) * (y(k) - y(k-1))
///   u(k) = kp * e(k) + I(k) + D(k)
///
/// The derivative acts on the measurement, so reference motion never kicks
/// it. h is whatever the loop's period currently is; every term uses it.
class PidController {
 public:
  explicit PidController(PidGains gains, double h = 0.004);

  void set_period(double h);
  double period() const noexcept { return h_; }
  const PidGains& gains() const noexcept { return gains_; }

  double integrator() const noexcept { return integrator_; }
  double derivative() const noexcept { return derivative_; }

  double compute(double reference, double measurement);

 private:
  PidGains gains_;
  double h_;
  double integrator_ = 0.0;
  double derivative_ = 0.0;
  double prev_measurement_ = 0.0;
  bool primed_ = false;
};

}  // namespace fuzzysched::control
