#pragma once

#include <cstddef>

namespace fuzzysched::fuzzy {

/// A symmetric set of integer levels {-n, ..., n} standing in for a real
/// interval [lo, hi]. The extreme levels correspond to the interval ends.
class QuantizedUniverse {
 public:
  QuantizedUniverse(int half_width, double lo, double hi);

  int min_level() const noexcept { return -half_width_; }
  int max_level() const noexcept { return half_width_; }
  int half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(2 * half_width_ + 1);
  }
  bool contains(int level) const noexcept {
    return level >= -half_width_ && level <= half_width_;
  }
  /// Position of `level` in [0, size()). Throws out-of-range.
  std::size_t index_of(int level) const;
  int level_at(std::size_t index) const noexcept {
    return static_cast<int>(index) - half_width_;
  }

  double span_lo() const noexcept { return lo_; }
  double span_hi() const noexcept { return hi_; }
  /// Linear map of a level onto the underlying interval.
  double to_value(int level) const noexcept;

  friend bool operator==(const QuantizedUniverse&,
                         const QuantizedUniverse&) = default;

 private:
  int half_width_;
  double lo_;
  double hi_;
};

/// Inputs e and ec: 13 levels over [-0.3, 0.3].
QuantizedUniverse input_universe();
/// Output eta: 15 levels over [0.5, 1.5].
QuantizedUniverse output_universe();

}  // namespace fuzzysched::fuzzy
