#include "fuzzysched/control/plant.hpp"

#include <cmath>

#include "fuzzysched/error.hpp"

namespace fuzzysched::control {

PlantState plant_step(const PlantState& state, double u, double dt,
                      const PlantParams& params) {
  if (dt < 0.0) {
    throw Error(ErrorKind::kOutOfRange, "plant_step: negative dt");
  }
  if (!(params.s1 > 0.0) || !(params.s2 > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "plant_step: s1 and s2 must be > 0");
  }
  const double a = params.pole();
  const double v_ss = params.input_gain() * u / a;  // steady-state velocity
  const double decay = -std::expm1(-a * dt);        // 1 - exp(-a dt)
  const double dv = state.x2 - v_ss;

  PlantState next;
  next.x2 = v_ss + dv * (1.0 - decay);
  next.x1 = state.x1 + dv * decay / a + v_ss * dt;
  next.u = u;
  return next;
}

}  // namespace fuzzysched::control
