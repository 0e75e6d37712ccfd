#include "fuzzysched/fuzzy/membership.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::fuzzy {
namespace {

double triangular(const std::vector<int>& peaks, std::size_t i, int x) {
  const int p = peaks[i];
  if (x == p) return 1.0;
  if (x < p) {
    if (i == 0) return 1.0;
    const int left = peaks[i - 1];
    return std::max(0.0, static_cast<double>(x - left) / (p - left));
  }
  if (i + 1 == peaks.size()) return 1.0;
  const int right = peaks[i + 1];
  return std::max(0.0, static_cast<double>(right - x) / (right - p));
}

}  // namespace

MembershipFamily::MembershipFamily(QuantizedUniverse universe,
                                   std::vector<std::string> labels,
                                   std::vector<int> peaks)
    : universe_(universe), labels_(std::move(labels)), peaks_(std::move(peaks)) {
  if (labels_.size() < 2 || labels_.size() != peaks_.size()) {
    throw Error(ErrorKind::kOutOfRange,
                "membership family needs >= 2 labels, one peak each");
  }
  for (std::size_t i = 0; i < peaks_.size(); ++i) {
    if (!universe_.contains(peaks_[i])) {
      throw Error(ErrorKind::kOutOfRange,
                  fmt::format("peak of {} outside universe", labels_[i]));
    }
    if (i > 0 && peaks_[i] <= peaks_[i - 1]) {
      throw Error(ErrorKind::kOutOfRange, "peaks must be strictly increasing");
    }
  }

  const std::size_t n = universe_.size();
  grid_.resize(labels_.size() * n);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      grid_[i * n + k] = triangular(peaks_, i, universe_.level_at(k));
    }
  }

  // Every level must belong to something; partition sums stay in (0, 2].
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < labels_.size(); ++i) sum += grid_[i * n + k];
    if (!(sum > 0.0) || sum > 2.0) {
      throw Error(ErrorKind::kDegenerateSet,
                  fmt::format("membership sum {} at level {} outside (0, 2]",
                              sum, universe_.level_at(k)));
    }
  }
}

double MembershipFamily::degree(std::size_t i, int level) const {
  const std::size_t k = universe_.index_of(level);
  if (i >= labels_.size()) {
    throw Error(ErrorKind::kOutOfRange, "label index out of range");
  }
  return grid_[i * universe_.size() + k];
}

std::span<const double> MembershipFamily::shape(std::size_t i) const {
  if (i >= labels_.size()) {
    throw Error(ErrorKind::kOutOfRange, "label index out of range");
  }
  return std::span<const double>(grid_).subspan(i * universe_.size(),
                                                universe_.size());
}

MembershipFamily default_input_family() {
  return {input_universe(), {"NB", "NS", "ZE", "PS", "PB"}, {-6, -3, 0, 3, 6}};
}

MembershipFamily default_output_family() {
  return {output_universe(),
          {"NB", "NM", "NS", "ZE", "PS", "PM", "PB"},
          {-6, -4, -2, 0, 2, 4, 6}};
}

}  // namespace fuzzysched::fuzzy
