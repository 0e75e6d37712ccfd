#pragma once

#include <span>
#include <string>
#include <vector>

#include "fuzzysched/fuzzy/universe.hpp"

namespace fuzzysched::fuzzy {

/// Linguistic labels over a quantized universe, each with a triangular
/// membership function. Interior labels rise linearly from the previous
/// label's peak and fall to the next label's peak; the first and last
/// labels are shoulders that stay at 1 beyond their peak.
///
/// Degrees are tabulated per (label, level) at construction, so a family is
/// an immutable value after that.
class MembershipFamily {
 public:
  MembershipFamily(QuantizedUniverse universe, std::vector<std::string> labels,
                   std::vector<int> peaks);

  const QuantizedUniverse& universe() const noexcept { return universe_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  int peak(std::size_t i) const { return peaks_.at(i); }

  /// Membership of `level` in label `i`. Throws out-of-range on a bad level.
  double degree(std::size_t i, int level) const;

  /// Tabulated shape of one label across every level of the universe.
  std::span<const double> shape(std::size_t i) const;

 private:
  QuantizedUniverse universe_;
  std::vector<std::string> labels_;
  std::vector<int> peaks_;
  std::vector<double> grid_;  // label-major, universe().size() per label
};

/// NB NS ZE PS PB peaking at -6 -3 0 3 6.
MembershipFamily default_input_family();
/// NB NM NS ZE PS PM PB peaking at -6 -4 -2 0 2 4 6.
MembershipFamily default_output_family();

}  // namespace fuzzysched::fuzzy
