#include "fuzzysched/fuzzy/universe.hpp"

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::fuzzy {

QuantizedUniverse::QuantizedUniverse(int half_width, double lo, double hi)
    : half_width_(half_width), lo_(lo), hi_(hi) {
  if (half_width <= 0) {
    throw Error(ErrorKind::kOutOfRange, "universe needs at least 3 levels");
  }
  if (!(lo < hi)) {
    throw Error(ErrorKind::kOutOfRange, "universe span must be increasing");
  }
}

std::size_t QuantizedUniverse::index_of(int level) const {
  if (!contains(level)) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("level {} outside [{}, {}]", level, -half_width_,
                            half_width_));
  }
  return static_cast<std::size_t>(level + half_width_);
}

double QuantizedUniverse::to_value(int level) const noexcept {
  const double t = static_cast<double>(level + half_width_) /
                   static_cast<double>(2 * half_width_);
  return lo_ + t * (hi_ - lo_);
}

QuantizedUniverse input_universe() { return {6, -0.3, 0.3}; }
QuantizedUniverse output_universe() { return {7, 0.5, 1.5}; }

}  // namespace fuzzysched::fuzzy
