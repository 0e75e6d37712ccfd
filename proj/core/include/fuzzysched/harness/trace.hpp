#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysched/control/reference.hpp"

namespace fuzzysched::harness {

enum class RecordKind { kStart, kComplete, kInvoke, kEnd };

std::string_view to_string(RecordKind kind) noexcept;

/// One observation row. Periods and miss counters run parallel to the
/// scenario's task list.
struct TraceRecord {
  double time = 0.0;  // s
  RecordKind kind = RecordKind::kStart;
  std::string task;  // completing task, or empty
  std::vector<double> periods;
  std::optional<double> u_hat;
  std::optional<double> demand;
  std::optional<double> eta;
  control::Point robot;
  control::Point target;
  double error = 0.0;  // m
  std::vector<std::int64_t> misses;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Frozen column layout, for task names n1..nk:
///   time_s,event,task,period_<n1>_s..period_<nk>_s,u_hat,u_demand,eta,
///   x_act_m,y_act_m,x_ref_m,y_ref_m,error_m,misses_<n1>..misses_<nk>
std::string trace_csv_header(const std::vector<std::string>& task_names);

/// Floats are written in shortest round-trip form, so reading back yields
/// bit-identical values. Absent optionals are empty fields.
void write_trace_csv(std::ostream& out, const std::vector<std::string>& task_names,
                     const std::vector<TraceRecord>& trace);

struct ParsedTrace {
  std::vector<std::string> task_names;
  std::vector<TraceRecord> records;
};

/// Throws config-syntax on malformed input.
ParsedTrace read_trace_csv(std::istream& in);

}  // namespace fuzzysched::harness
