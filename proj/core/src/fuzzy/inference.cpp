#include "fuzzysched/fuzzy/inference.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::fuzzy {

MembershipVector fuzzify(int level, const MembershipFamily& family) {
  if (!family.universe().contains(level)) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("cannot fuzzify level {}: outside [{}, {}]", level,
                            family.universe().min_level(),
                            family.universe().max_level()));
  }
  MembershipVector mu(family.label_count());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = family.degree(i, level);
  return mu;
}

OutputSet infer(std::span<const double> mu_e, std::span<const double> mu_ec,
                const RuleBase& rules, const MembershipFamily& out_family) {
  if (mu_e.size() != kInputLabels || mu_ec.size() != kInputLabels) {
    throw Error(ErrorKind::kOutOfRange,
                "inference expects 5-label membership vectors");
  }
  if (out_family.label_count() != kOutputLabels) {
    throw Error(ErrorKind::kOutOfRange, "inference expects 7 output labels");
  }

  OutputSet out{out_family.universe(),
                std::vector<double>(out_family.universe().size(), 0.0)};
  bool fired = false;
  for (std::size_t a = 0; a < kInputLabels; ++a) {
    for (std::size_t b = 0; b < kInputLabels; ++b) {
      const double strength = std::min(mu_e[a], mu_ec[b]);
      if (strength <= 0.0) continue;
      fired = true;
      const auto shape =
          out_family.shape(static_cast<std::size_t>(rules.consequent(a, b)));
      for (std::size_t k = 0; k < shape.size(); ++k) {
        out.degrees[k] = std::max(out.degrees[k], std::min(strength, shape[k]));
      }
    }
  }
  if (!fired) {
    throw Error(ErrorKind::kDegenerateSet, "no rule fired");
  }
  return out;
}

double defuzzify_centroid(const OutputSet& aggregate) {
  double mass = 0.0;
  double moment = 0.0;
  for (std::size_t k = 0; k < aggregate.degrees.size(); ++k) {
    const double mu = aggregate.degrees[k];
    mass += mu;
    moment += aggregate.universe.level_at(k) * mu;
  }
  if (!(mass > 0.0)) {
    throw Error(ErrorKind::kDegenerateSet, "centroid of an empty fuzzy set");
  }
  return moment / mass;
}

int round_half_away(double value) noexcept {
  return static_cast<int>(std::round(value));
}

LookupTable compile_lookup_table(const RuleBase& rules,
                                 const MembershipFamily& in_family,
                                 const MembershipFamily& out_family) {
  const int half = LookupTable::kInputHalfWidth;
  LookupTable::Grid grid{};
  for (int e = -half; e <= half; ++e) {
    const auto mu_e = fuzzify(e, in_family);
    for (int ec = -half; ec <= half; ++ec) {
      const auto mu_ec = fuzzify(ec, in_family);
      const double y = defuzzify_centroid(infer(mu_e, mu_ec, rules, out_family));
      grid[static_cast<std::size_t>(e + half)][static_cast<std::size_t>(ec + half)] =
          round_half_away(y);
    }
  }
  return LookupTable(grid, Provenance::kCompiled);
}

}  // namespace fuzzysched::fuzzy
