// fuzzysched: run scheduling experiments, noise sweeps and table checks.
//
//   fuzzysched run   [--scenario f.yaml] [--mode m] [--seed n] --out dir
//   fuzzysched sweep --noise-sweep [--seeds 10] --out dir
//   fuzzysched table --compile --diff [--out dir]
//
// On failure prints "error: <category>: <message>" and exits with the code
// listed in exit_code().

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fuzzysched/error.hpp"
#include "fuzzysched/fuzzy/inference.hpp"
#include "fuzzysched/fuzzy/lookup_table.hpp"
#include "fuzzysched/fuzzy/membership.hpp"
#include "fuzzysched/fuzzy/rules.hpp"
#include "fuzzysched/harness/experiment.hpp"
#include "fuzzysched/harness/scenario.hpp"
#include "fuzzysched/harness/sweep.hpp"

namespace fs = std::filesystem;
using namespace fuzzysched;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOutOfRange: return 3;
    case ErrorKind::kDegenerateSet: return 4;
    case ErrorKind::kInfeasibleLoad: return 5;
    case ErrorKind::kConfigSyntax: return 6;
    case ErrorKind::kConfigSemantic: return 7;
    case ErrorKind::kIo: return 8;
    case ErrorKind::kInvariant: return 9;
  }
  return 1;
}

struct Overrides {
  std::optional<std::string> mode;
  std::optional<double> horizon;
  std::optional<double> ur;
  std::optional<double> tfs;
};

void add_overrides(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--mode", o.mode, "open-loop, ideal or fuzzy");
  cmd.add_option("--horizon", o.horizon, "simulated seconds");
  cmd.add_option("--ur", o.ur, "desired utilization");
  cmd.add_option("--tfs", o.tfs, "scheduler invocation interval, s");
}

harness::ScenarioConfig load(const std::string& path, const Overrides& o) {
  harness::ScenarioConfig c =
      path.empty() ? harness::default_scenario() : harness::load_scenario(path);
  if (o.mode) c.scheduler.mode = sched::parse_mode(*o.mode);
  if (o.horizon) c.horizon = *o.horizon;
  if (o.ur) c.scheduler.ffs.desired_utilization = *o.ur;
  if (o.tfs) c.scheduler.ffs.period = *o.tfs;
  harness::validate(c);
  return c;
}

fuzzy::LookupTable compiled_table() {
  return fuzzy::compile_lookup_table(fuzzy::utilization_rules(),
                                     fuzzy::default_input_family(),
                                     fuzzy::default_output_family());
}

std::string table_report() {
  const fuzzy::LookupTable compiled = compiled_table();
  const fuzzy::LookupTable& golden = fuzzy::golden_lookup_table();
  return fuzzy::format_diff_report(compiled, golden,
                                   fuzzy::diff_tables(compiled, golden));
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path.string()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy feedback scheduling co-simulation"};
  app.require_subcommand(1);

  std::string scenario;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir;
  bool with_diff = false;
  Overrides overrides;

  auto* run = app.add_subcommand("run", "run one experiment");
  run->add_option("--scenario", scenario, "YAML scenario (default: built-in)");
  run->add_option("--seed", seed, "run seed (default: scenario seed)")
      ->each([&](const std::string&) { seed_given = true; });
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_flag("--table-diff", with_diff, "also write table_diff.txt");
  add_overrides(*run, overrides);

  bool noise_sweep = false;
  int seeds = 10;
  auto* sweep = app.add_subcommand("sweep", "noise robustness sweep (fuzzy mode unless --mode)");
  sweep->add_flag("--noise-sweep", noise_sweep, "sweep r over 0, 0.02, 0.05, 0.1")
      ->required();
  sweep->add_option("--scenario", scenario, "YAML scenario (default: built-in)");
  sweep->add_option("--seeds", seeds, "seeds per noise level, 1..n")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_dir, "output directory")->required();
  add_overrides(*sweep, overrides);

  bool compile = false;
  bool diff = false;
  auto* table = app.add_subcommand("table", "compile the rule base and diff it");
  table->add_flag("--compile", compile, "print the compiled table");
  table->add_flag("--diff", diff, "print the diff against the shipped table");
  table->add_option("--out", out_dir, "write table_diff.txt here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      const harness::ScenarioConfig c = load(scenario, overrides);
      const auto result = harness::run_experiment(c, seed_given ? seed : c.seed);
      std::optional<std::string> report;
      if (with_diff) report = table_report();
      harness::emit_traces(result, out_dir, report);
      harness::write_summary(std::cout, result.summary);
    } else if (*sweep) {
      harness::ScenarioConfig c = load(scenario, overrides);
      if (!overrides.mode) c.scheduler.mode = sched::Mode::kFuzzy;
      const auto points = harness::run_noise_sweep(c, harness::kNoiseLevels, seeds, out_dir);
      harness::write_sweep_csv(std::cout, points);
      const bool all_stable = std::all_of(points.begin(), points.end(),
                                          [](const auto& p) { return p.stable; });
      std::cout << (all_stable ? "all runs stable\n" : "unstable runs present\n");
      return all_stable ? 0 : 10;
    } else if (*table) {
      if (!compile && !diff) {
        std::cerr << "table: pass --compile and/or --diff\n";
        return 2;
      }
      if (compile) std::cout << compiled_table().to_text();
      if (diff) {
        const std::string report = table_report();
        std::cout << report;
        if (!out_dir.empty()) {
          fs::create_directories(out_dir);
          write_text(fs::path(out_dir) / "table_diff.txt", report);
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << fmt::format("error: {}: {}\n", to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << fmt::format("error: io: {}\n", e.what());
    return exit_code(ErrorKind::kIo);
  }
  return 0;
}
