#include "fuzzysched/fuzzy/lookup_table.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::fuzzy {
namespace detail {
extern const std::string_view kGoldenTableText;
}  // namespace detail

namespace {

constexpr int kHalf = LookupTable::kInputHalfWidth;

std::size_t cell_index(int q) {
  if (q < -kHalf || q > kHalf) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("table index {} outside [-6, 6]", q));
  }
  return static_cast<std::size_t>(q + kHalf);
}

}  // namespace

LookupTable::LookupTable(const Grid& cells, Provenance provenance)
    : cells_(cells), provenance_(provenance) {
  for (const auto& row : cells_) {
    for (int v : row) {
      if (v < -kOutputHalfWidth || v > kOutputHalfWidth) {
        throw Error(ErrorKind::kOutOfRange,
                    fmt::format("table cell {} outside [-7, 7]", v));
      }
    }
  }
}

int LookupTable::at(int e_q, int ec_q) const {
  return cells_[cell_index(e_q)][cell_index(ec_q)];
}

bool LookupTable::is_monotone() const noexcept {
  for (std::size_t r = 0; r < kSide; ++r) {
    for (std::size_t c = 0; c < kSide; ++c) {
      if (c + 1 < kSide && cells_[r][c] < cells_[r][c + 1]) return false;
      if (r + 1 < kSide && cells_[r][c] < cells_[r + 1][c]) return false;
    }
  }
  return true;
}

std::string LookupTable::to_text() const {
  std::string out;
  for (const auto& row : cells_) {
    for (std::size_t c = 0; c < kSide; ++c) {
      out += fmt::format("{:>3}", row[c]);
    }
    out += '\n';
  }
  return out;
}

LookupTable parse_lookup_table(std::string_view text, Provenance provenance) {
  LookupTable::Grid grid{};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() ||
        (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\n' &&
         *ptr != '\r')) {
      throw Error(ErrorKind::kConfigSyntax,
                  fmt::format("lookup table: bad integer at offset {}", pos));
    }
    if (count >= LookupTable::kSide * LookupTable::kSide) {
      throw Error(ErrorKind::kConfigSyntax, "lookup table: more than 169 cells");
    }
    grid[count / LookupTable::kSide][count % LookupTable::kSide] = value;
    ++count;
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (count != LookupTable::kSide * LookupTable::kSide) {
    throw Error(ErrorKind::kConfigSyntax,
                fmt::format("lookup table: expected 169 cells, got {}", count));
  }
  return LookupTable(grid, provenance);
}

LookupTable load_lookup_table(const std::filesystem::path& path,
                              Provenance provenance) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo,
                fmt::format("cannot open lookup table '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lookup_table(buf.str(), provenance);
}

std::string_view golden_lookup_table_text() noexcept {
  return detail::kGoldenTableText;
}

const LookupTable& golden_lookup_table() {
  static const LookupTable table =
      parse_lookup_table(detail::kGoldenTableText, Provenance::kGolden);
  return table;
}

TableDiff diff_tables(const LookupTable& compiled, const LookupTable& golden) {
  TableDiff diff;
  for (std::size_t r = 0; r < LookupTable::kSide; ++r) {
    for (std::size_t c = 0; c < LookupTable::kSide; ++c) {
      const int d = compiled.cells()[r][c] - golden.cells()[r][c];
      diff.delta[r][c] = d;
      if (d == 0) ++diff.cells_exact;
      if (std::abs(d) <= 1) ++diff.cells_within_one;
      diff.max_abs_delta = std::max(diff.max_abs_delta, std::abs(d));
    }
  }
  return diff;
}

std::string format_diff_report(const LookupTable& compiled,
                               const LookupTable& golden, const TableDiff& diff) {
  auto grid_block = [](std::string_view title, const LookupTable::Grid& g) {
    std::string out = fmt::format("# {}\n#      ec:", title);
    for (int ec = -kHalf; ec <= kHalf; ++ec) out += fmt::format("{:>3}", ec);
    out += '\n';
    for (std::size_t r = 0; r < LookupTable::kSide; ++r) {
      out += fmt::format("e={:>3}    ", static_cast<int>(r) - kHalf);
      for (int v : g[r]) out += fmt::format("{:>3}", v);
      out += '\n';
    }
    return out;
  };

  std::string out;
  out += grid_block("compiled", compiled.cells());
  out += '\n';
  out += grid_block("golden", golden.cells());
  out += '\n';
  out += grid_block("compiled - golden", diff.delta);
  out += '\n';
  out += fmt::format("cells_total {}\n", LookupTable::kSide * LookupTable::kSide);
  out += fmt::format("cells_exact {}\n", diff.cells_exact);
  out += fmt::format("cells_within_one {}\n", diff.cells_within_one);
  out += fmt::format("fraction_within_one {:.6f}\n", diff.fraction_within_one());
  out += fmt::format("max_abs_delta {}\n", diff.max_abs_delta);
  out += fmt::format("compiled_monotone {}\n", compiled.is_monotone());
  out += fmt::format("golden_monotone {}\n", golden.is_monotone());
  return out;
}

}  // namespace fuzzysched::fuzzy
