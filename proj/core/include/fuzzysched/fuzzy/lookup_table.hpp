#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

namespace fuzzysched::fuzzy {

enum class Provenance { kGolden, kCompiled };

/// 13x13 grid of quantized output levels indexed by quantized (e, ec), both
/// in [-6, 6]. Cell values lie in [-7, 7].
class LookupTable {
 public:
  static constexpr int kInputHalfWidth = 6;
  static constexpr int kOutputHalfWidth = 7;
  static constexpr std::size_t kSide = 2 * kInputHalfWidth + 1;
  using Grid = std::array<std::array<int, kSide>, kSide>;

  /// Throws out-of-range if any cell is outside [-7, 7].
  LookupTable(const Grid& cells, Provenance provenance);

  /// Stored output level for (e_q, ec_q). Throws out-of-range.
  int at(int e_q, int ec_q) const;
  const Grid& cells() const noexcept { return cells_; }
  Provenance provenance() const noexcept { return provenance_; }

  /// Non-increasing along every row (in ec) and every column (in e).
  bool is_monotone() const noexcept;

  /// Whitespace-separated grid, rows e=-6..6, columns ec=-6..6.
  std::string to_text() const;

  friend bool operator==(const LookupTable& a, const LookupTable& b) {
    return a.cells_ == b.cells_;
  }

 private:
  Grid cells_;
  Provenance provenance_;
};

/// Parses the plain-text grid format. Exactly 169 integers are required.
LookupTable parse_lookup_table(std::string_view text, Provenance provenance);
LookupTable load_lookup_table(const std::filesystem::path& path,
                              Provenance provenance);

/// The shipped golden table, embedded at build time from
/// core/data/golden_lookup_table.txt.
const LookupTable& golden_lookup_table();
std::string_view golden_lookup_table_text() noexcept;

/// Constant-time cell access; same contract as LookupTable::at.
inline int lookup(const LookupTable& table, int e_q, int ec_q) {
  return table.at(e_q, ec_q);
}

struct TableDiff {
  LookupTable::Grid delta{};  // compiled - golden
  int cells_within_one = 0;
  int cells_exact = 0;
  int max_abs_delta = 0;

  double fraction_within_one() const noexcept {
    return static_cast<double>(cells_within_one) /
           static_cast<double>(LookupTable::kSide * LookupTable::kSide);
  }
};

TableDiff diff_tables(const LookupTable& compiled, const LookupTable& golden);

/// Human-readable report: both grids, the delta grid and agreement counts.
std::string format_diff_report(const LookupTable& compiled,
                               const LookupTable& golden, const TableDiff& diff);

}  // namespace fuzzysched::fuzzy
