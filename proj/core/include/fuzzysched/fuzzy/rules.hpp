#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace fuzzysched::fuzzy {

enum class InputLabel { kNB, kNS, kZE, kPS, kPB };
enum class OutputLabel { kNB, kNM, kNS, kZE, kPS, kPM, kPB };

inline constexpr std::size_t kInputLabels = 5;
inline constexpr std::size_t kOutputLabels = 7;

std::string_view to_string(InputLabel label) noexcept;
std::string_view to_string(OutputLabel label) noexcept;

/// Complete 5x5 rule matrix: error label x error-change label -> rescale
/// factor label.
class RuleBase {
 public:
  using Matrix = std::array<std::array<OutputLabel, kInputLabels>, kInputLabels>;

  explicit RuleBase(const Matrix& matrix) : matrix_(matrix) {}

  OutputLabel consequent(InputLabel e, InputLabel ec) const noexcept {
    return matrix_[static_cast<std::size_t>(e)][static_cast<std::size_t>(ec)];
  }
  OutputLabel consequent(std::size_t e, std::size_t ec) const {
    return matrix_.at(e).at(ec);
  }
  const Matrix& matrix() const noexcept { return matrix_; }

  friend bool operator==(const RuleBase&, const RuleBase&) = default;

 private:
  Matrix matrix_;
};

/// The 25 utilization-regulation rules: a large overload (E = NB) calls for
/// fast period growth, underload shrinks periods gently.
RuleBase utilization_rules();

}  // namespace fuzzysched::fuzzy
