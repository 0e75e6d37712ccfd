#include "fuzzysched/harness/trace.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::harness {
namespace {

constexpr std::size_t kFixedColumns = 11;

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

[[noreturn]] void bad(std::size_t line, std::string_view what) {
  throw ConfigSyntaxError(static_cast<int>(line), 1, std::string(what));
}

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    bad(line, fmt::format("bad number '{}'", field));
  }
  return value;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line) {
  if (field.empty()) return std::nullopt;
  return parse_number<double>(field, line);
}

RecordKind parse_kind(std::string_view text, std::size_t line) {
  if (text == "start") return RecordKind::kStart;
  if (text == "complete") return RecordKind::kComplete;
  if (text == "invoke") return RecordKind::kInvoke;
  if (text == "end") return RecordKind::kEnd;
  bad(line, fmt::format("unknown event '{}'", text));
}

std::string optional_field(const std::optional<double>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

}  // namespace

std::string_view to_string(RecordKind kind) noexcept {
  switch (kind) {
    case RecordKind::kStart: return "start";
    case RecordKind::kComplete: return "complete";
    case RecordKind::kInvoke: return "invoke";
    case RecordKind::kEnd: return "end";
  }
  return "?";
}

std::string trace_csv_header(const std::vector<std::string>& task_names) {
  std::string h = "time_s,event,task";
  for (const auto& n : task_names) h += fmt::format(",period_{}_s", n);
  h += ",u_hat,u_demand,eta,x_act_m,y_act_m,x_ref_m,y_ref_m,error_m";
  for (const auto& n : task_names) h += fmt::format(",misses_{}", n);
  return h;
}

void write_trace_csv(std::ostream& out, const std::vector<std::string>& task_names,
                     const std::vector<TraceRecord>& trace) {
  out << trace_csv_header(task_names) << '\n';
  std::string line;
  for (const TraceRecord& r : trace) {
    if (r.periods.size() != task_names.size() || r.misses.size() != task_names.size()) {
      throw Error(ErrorKind::kInvariant, "trace record width does not match tasks");
    }
    line = fmt::format("{},{},{}", r.time, to_string(r.kind), r.task);
    for (double p : r.periods) line += fmt::format(",{}", p);
    line += fmt::format(",{},{},{},{},{},{},{},{}", optional_field(r.u_hat),
                        optional_field(r.demand), optional_field(r.eta), r.robot.x,
                        r.robot.y, r.target.x, r.target.y, r.error);
    for (auto m : r.misses) line += fmt::format(",{}", m);
    out << line << '\n';
  }
}

ParsedTrace read_trace_csv(std::istream& in) {
  ParsedTrace parsed;
  std::string line;
  if (!std::getline(in, line)) bad(1, "missing header");

  const auto header = split(line);
  if (header.size() < kFixedColumns || (header.size() - kFixedColumns) % 2 != 0) {
    bad(1, "unexpected column count");
  }
  const std::size_t k = (header.size() - kFixedColumns) / 2;
  for (std::size_t i = 0; i < k; ++i) {
    std::string_view col = header[3 + i];
    if (!col.starts_with("period_") || !col.ends_with("_s")) {
      bad(1, fmt::format("unexpected column '{}'", col));
    }
    parsed.task_names.emplace_back(col.substr(7, col.size() - 9));
  }
  if (trace_csv_header(parsed.task_names) != line) bad(1, "header mismatch");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size()) bad(line_no, "wrong field count");

    TraceRecord r;
    r.time = parse_number<double>(f[0], line_no);
    r.kind = parse_kind(f[1], line_no);
    r.task = std::string(f[2]);
    for (std::size_t i = 0; i < k; ++i) {
      r.periods.push_back(parse_number<double>(f[3 + i], line_no));
    }
    std::size_t c = 3 + k;
    r.u_hat = parse_optional(f[c++], line_no);
    r.demand = parse_optional(f[c++], line_no);
    r.eta = parse_optional(f[c++], line_no);
    r.robot.x = parse_number<double>(f[c++], line_no);
    r.robot.y = parse_number<double>(f[c++], line_no);
    r.target.x = parse_number<double>(f[c++], line_no);
    r.target.y = parse_number<double>(f[c++], line_no);
    r.error = parse_number<double>(f[c++], line_no);
    for (std::size_t i = 0; i < k; ++i) {
      r.misses.push_back(parse_number<std::int64_t>(f[c++], line_no));
    }
    parsed.records.push_back(std::move(r));
  }
  return parsed;
}

}  // namespace fuzzysched::harness
