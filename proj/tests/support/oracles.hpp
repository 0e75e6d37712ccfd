#pragma once

#include <vector>

#include "fuzzysched/control/plant.hpp"
#include "fuzzysched/fuzzy/inference.hpp"
#include "fuzzysched/fuzzy/membership.hpp"

namespace fuzzysched::testing {

/// Classic fourth-order Runge-Kutta on the plant ODE with `steps` equal
/// substeps. Independent of the closed form in plant_step.
control::PlantState rk4_plant(const control::PlantState& s, double u, double dt,
                              int steps, const control::PlantParams& p = {});

/// Triangular membership rising from `left` to `peak` and falling to
/// `right`. Passing left == peak (or right == peak) makes that side a
/// shoulder held at 1.
double triangle(double x, double left, double peak, double right);

/// Max-min inference written as nested loops straight from the definition,
/// over the family's tabulated shapes.
std::vector<double> brute_force_infer(const std::vector<double>& mu_e,
                                      const std::vector<double>& mu_ec,
                                      const fuzzy::RuleBase& rules,
                                      const fuzzy::MembershipFamily& out_family);

}  // namespace fuzzysched::testing
