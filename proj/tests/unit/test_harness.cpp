#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fuzzysched/error.hpp"
#include "fuzzysched/harness/experiment.hpp"
#include "fuzzysched/harness/scenario.hpp"
#include "fuzzysched/harness/summary.hpp"
#include "fuzzysched/harness/sweep.hpp"
#include "fuzzysched/harness/trace.hpp"

using namespace fuzzysched;
using namespace fuzzysched::harness;

namespace {

TraceRecord record(double t, RecordKind kind, double error,
                   std::optional<double> u = std::nullopt) {
  TraceRecord r;
  r.time = t;
  r.kind = kind;
  r.periods = {3e-3, 4e-3, 5e-3};
  r.u_hat = u;
  r.error = error;
  r.misses = {0, 0, 0};
  return r;
}

const std::vector<std::string> kNames{"tau1", "tau2", "tau3"};

ScenarioConfig short_run(double horizon) {
  ScenarioConfig c = default_scenario();
  c.horizon = horizon;
  validate(c);
  return c;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("an empty scenario document is the default scenario") {
  CHECK(parse_scenario("") == default_scenario());
  CHECK(parse_scenario("# nothing\n") == default_scenario());
}

TEST_CASE("overriding the noise level changes only that field") {
  const auto c = parse_scenario("noise:\n  r: 0.1\n");
  auto expected = default_scenario();
  expected.noise.r = 0.1;
  CHECK(c == expected);
}

TEST_CASE("default scenario values") {
  const auto c = default_scenario();
  REQUIRE(c.tasks.size() == 3);
  CHECK(c.tasks[0].spec.period == 3e-3);
  CHECK(c.tasks[1].spec.period == 4e-3);
  CHECK(c.mean_exec(0, 0.5) == 0.6e-3);
  CHECK(c.mean_exec(2, 1.5) == 2.0e-3);
  CHECK(c.mean_exec(1, 2.0) == 1.2e-3);
  CHECK(c.mean_exec(2, 4.0) == 1.5e-3);
  CHECK(c.scheduler.ffs.desired_utilization == 0.85);
  CHECK(c.scheduler.ffs.period == 0.02);
  CHECK(c.find_task("tau3") == 2u);
  CHECK_FALSE(c.find_task("nope"));
}

TEST_CASE("a gap in the execution-time schedule is a semantic error") {
  try {
    (void)parse_scenario(
        "execution_times:\n"
        "  - start: 0\n    end: 3\n"
        "    means: {tau1: 0.0006, tau2: 0.0004, tau3: 0.001}\n");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfigSemantic);
    CHECK(std::string(e.what()).find("execution-time schedule gap") != std::string::npos);
  }
}

TEST_CASE("semantic errors in scenarios") {
  auto kind = [](std::string_view text) {
    try {
      (void)parse_scenario(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvariant;
  };
  CHECK(kind("horizon: -1\n") == ErrorKind::kConfigSemantic);
  CHECK(kind("bogus: 1\n") == ErrorKind::kConfigSemantic);
  CHECK(kind("scheduler:\n  mode: edf\n") == ErrorKind::kConfigSemantic);
  CHECK(kind("scheduler:\n  desired_utilization: 1.5\n") == ErrorKind::kConfigSemantic);
  CHECK(kind("noise:\n  r: -0.1\n") == ErrorKind::kConfigSemantic);
  CHECK(kind("horizon: abc\n") == ErrorKind::kConfigSemantic);
  CHECK(kind("- 1\n- 2\n") == ErrorKind::kConfigSemantic);
}

TEST_CASE("syntax errors carry a line and column") {
  try {
    (void)parse_scenario("noise:\n  r: [0.1\n");
    FAIL("expected an exception");
  } catch (const ConfigSyntaxError& e) {
    CHECK(e.kind() == ErrorKind::kConfigSyntax);
    CHECK(e.line() >= 2);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("scenario YAML round-trips") {
  auto c = default_scenario();
  CHECK(parse_scenario(to_yaml(c)) == c);
  c.noise.r = 0.05;
  c.scheduler.mode = sched::Mode::kIdeal;
  c.tasks[2].spec.offset = 1e-3;
  c.seed = 77;
  CHECK(parse_scenario(to_yaml(c)) == c);
}

TEST_CASE("the shipped default scenario file matches the built-in default") {
  const auto path = std::filesystem::path(FUZZYSCHED_SOURCE_DIR) / "scenarios/default.yaml";
  CHECK(load_scenario(path) == default_scenario());
  try {
    (void)load_scenario("/nonexistent/scenario.yaml");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
}

TEST_CASE("trace CSV layout") {
  CHECK(trace_csv_header({"a", "b"}) ==
        "time_s,event,task,period_a_s,period_b_s,u_hat,u_demand,eta,x_act_m,y_act_m,"
        "x_ref_m,y_ref_m,error_m,misses_a,misses_b");

  const std::vector trace{record(0.0, RecordKind::kStart, 0.0),
                          record(0.02, RecordKind::kInvoke, 0.001, 0.8),
                          record(0.04, RecordKind::kEnd, 0.002)};
  std::ostringstream out;
  write_trace_csv(out, kNames, trace);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("0.02,invoke,,") != std::string::npos);

  std::ostringstream again;
  write_trace_csv(again, kNames, trace);
  CHECK(again.str() == text);

  std::istringstream in(text);
  const auto parsed = read_trace_csv(in);
  CHECK(parsed.task_names == kNames);
  CHECK(parsed.records == trace);
}

TEST_CASE("malformed trace CSV is a syntax error") {
  std::istringstream bad_header("time_s,event\n");
  CHECK_THROWS_AS(read_trace_csv(bad_header), ConfigSyntaxError);

  std::ostringstream out;
  write_trace_csv(out, kNames, {record(0.0, RecordKind::kStart, 0.0)});
  std::istringstream bad_row(out.str() + "1,start,,x\n");
  try {
    (void)read_trace_csv(bad_row);
    FAIL("expected an exception");
  } catch (const ConfigSyntaxError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("summary of a constant-error trace") {
  std::vector<TraceRecord> trace;
  for (int k = 0; k <= 100; ++k) {
    trace.push_back(record(k * 0.01, k == 0 ? RecordKind::kStart : RecordKind::kInvoke,
                           0.001, k == 0 ? std::nullopt : std::optional(0.8)));
  }
  trace.back().misses = {0, 4, 0};
  const auto s = summarize(trace, kNames);
  CHECK(s.mean_error == doctest::Approx(0.001));
  CHECK(s.max_error == 0.001);
  CHECK(s.mean_u_hat == doctest::Approx(0.8));
  CHECK(s.u_samples == 100);
  CHECK(s.misses == std::vector<std::int64_t>{0, 4, 0});
  CHECK(s.eta_min == 1.0);
  CHECK(s.eta_max == 1.0);
}

TEST_CASE("summary weights error by time held") {
  // Error 0 on [0, 1), 1 on [1, 2].
  const std::vector trace{record(0.0, RecordKind::kStart, 0.0),
                          record(1.0, RecordKind::kComplete, 1.0),
                          record(2.0, RecordKind::kEnd, 1.0)};
  const auto s = summarize(trace, kNames);
  CHECK(s.mean_error == doctest::Approx(0.5));
  CHECK(s.max_error == 1.0);
  CHECK_THROWS_AS(summarize(std::vector<TraceRecord>{}, kNames), Error);
}

TEST_CASE("summary text and statistics comparison") {
  const std::vector trace{record(0.0, RecordKind::kStart, 0.0),
                          record(1.0, RecordKind::kEnd, 0.5, 0.9)};
  auto a = summarize(trace, kNames);
  auto b = a;
  b.wall_seconds = 12.0;
  CHECK(a.same_statistics(b));
  b.max_error = 0.4;
  CHECK_FALSE(a.same_statistics(b));

  std::ostringstream out;
  write_summary(out, a);
  CHECK(out.str().find("mean_error_m ") != std::string::npos);
  CHECK(out.str().find("misses_tau2 0") != std::string::npos);
}

TEST_CASE("error trend flags monotone growth") {
  std::vector<TraceRecord> growing;
  std::vector<TraceRecord> flat;
  for (int k = 0; k <= 100; ++k) {
    const double t = k * 0.01;
    growing.push_back(record(t, RecordKind::kInvoke, 0.001 * (1 + k)));
    flat.push_back(record(t, RecordKind::kInvoke, 0.001 * (1 + (k % 3))));
  }
  CHECK(final_error_trend(growing).monotone_growth);
  CHECK_FALSE(final_error_trend(flat).monotone_growth);
  CHECK(final_error_trend(growing).bin_max.size() == 10);

  CHECK(assess_stability(flat, 0.1).stable());
  CHECK_FALSE(assess_stability(growing, 0.1).stable());
  CHECK_FALSE(assess_stability(flat, 0.001).bounded);
}

TEST_CASE("experiments are deterministic in the seed") {
  const auto c = short_run(0.5);
  const auto a = run_experiment(c, 3);
  const auto b = run_experiment(c, 3);
  CHECK(a.trace == b.trace);
  CHECK(a.summary.same_statistics(b.summary));
  const auto other = run_experiment(c, 4);
  CHECK_FALSE(other.trace == a.trace);

  REQUIRE(!a.trace.empty());
  CHECK(a.trace.front().kind == RecordKind::kStart);
  CHECK(a.trace.back().kind == RecordKind::kEnd);
  CHECK(a.trace.back().time == doctest::Approx(0.5));
  CHECK(a.invocations.size() == 24);  // 20 ms boundaries below 0.5 s
}

TEST_CASE("the scheduler runs at the highest priority in every mode") {
  for (auto mode : {sched::Mode::kOpenLoop, sched::Mode::kIdeal, sched::Mode::kFuzzy}) {
    auto c = short_run(0.1);
    c.scheduler.mode = mode;
    const auto r = run_experiment(c, 1);
    REQUIRE(r.priorities.size() == 4);
    CHECK(r.priorities.back() == 0);
    CHECK(!r.invocations.empty());
    if (mode == sched::Mode::kOpenLoop) {
      for (const auto& inv : r.invocations) CHECK(inv.eta == 1.0);
    }
  }
}

TEST_CASE("the ideal manager reports infeasible loads") {
  auto c = short_run(0.2);
  c.scheduler.mode = sched::Mode::kIdeal;
  for (auto& seg : c.schedule) seg.means[2] = 4.5e-3;  // tau3 alone at 0.9
  validate(c);
  try {
    (void)run_experiment(c, 1);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInfeasibleLoad);
  }
}

TEST_CASE("emitted files reproduce the run") {
  const auto c = short_run(0.3);
  const auto r = run_experiment(c, 2);
  const auto dir = std::filesystem::temp_directory_path() / "fuzzysched_emit_test";
  std::filesystem::remove_all(dir);
  emit_traces(r, dir, std::string("report\n"));
  CHECK(std::filesystem::exists(dir / "summary.txt"));
  CHECK(std::filesystem::exists(dir / "table_diff.txt"));

  std::ifstream in(dir / "trace.csv");
  const auto parsed = read_trace_csv(in);
  CHECK(parsed.records == r.trace);
  CHECK(summarize(parsed.records, parsed.task_names).same_statistics(r.summary));
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
