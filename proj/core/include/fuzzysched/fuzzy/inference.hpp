#pragma once

#include <span>
#include <vector>

#include "fuzzysched/fuzzy/lookup_table.hpp"
#include "fuzzysched/fuzzy/membership.hpp"
#include "fuzzysched/fuzzy/rules.hpp"

namespace fuzzysched::fuzzy {

/// One degree per label of a MembershipFamily.
using MembershipVector = std::vector<double>;

/// Degrees over every level of the output universe.
struct OutputSet {
  QuantizedUniverse universe;
  std::vector<double> degrees;
};

MembershipVector fuzzify(int level, const MembershipFamily& family);

/// Max-min inference: each rule fires at min(mu_e, mu_ec), its consequent is
/// clipped at that strength and the clipped sets are combined by pointwise max.
/// Throws degenerate-set if no rule fires.
OutputSet infer(std::span<const double> mu_e, std::span<const double> mu_ec,
                const RuleBase& rules, const MembershipFamily& out_family);

/// Centre of gravity over the quantized output levels.
/// Throws degenerate-set on an all-zero set.
double defuzzify_centroid(const OutputSet& aggregate);

/// Round to nearest, ties away from zero.
int round_half_away(double value) noexcept;

/// Runs fuzzify -> infer -> centroid -> round for all 169 input pairs.
LookupTable compile_lookup_table(const RuleBase& rules,
                                 const MembershipFamily& in_family,
                                 const MembershipFamily& out_family);

}  // namespace fuzzysched::fuzzy
