#include "fuzzysched/control/pid.hpp"

#include "fuzzysched/error.hpp"

namespace fuzzysched::control {

PidController::PidController(PidGains gains, double h) : gains_(gains), h_(h) {
  if (!(h > 0.0)) throw Error(ErrorKind::kOutOfRange, "PID period must be > 0");
  if (gains_.kd > 0.0 && !(gains_.n > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "PID filter coefficient must be > 0");
  }
}

void PidController::set_period(double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::kOutOfRange, "PID period must be > 0");
  h_ = h;
}

double PidController::compute(double reference, double measurement) {
  const double e = reference - measurement;
  if (!primed_) {
    prev_measurement_ = measurement;
    primed_ = true;
  }

  integrator_ += gains_.ki * h_ * e;

  if (gains_.kd > 0.0) {
    const double tf = gains_.kp > 0.0 ? gains_.kd / (gains_.kp * gains_.n) : 0.0;
    derivative_ = tf / (tf + h_) * derivative_ -
                  gains_.kd / (tf + h_) * (measurement - prev_measurement_);
  }
  prev_measurement_ = measurement;

  return gains_.kp * e + integrator_ + derivative_;
}

}  // namespace fuzzysched::control
