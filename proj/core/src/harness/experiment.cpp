#include "fuzzysched/harness/experiment.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>

#include <fmt/format.h>

#include "fuzzysched/control/pid.hpp"
#include "fuzzysched/control/plant.hpp"
#include "fuzzysched/error.hpp"
#include "fuzzysched/sim/random.hpp"

namespace fuzzysched::harness {
namespace {

using sim::Nanos;

// Plant of one axis, advanced lazily to whatever time is asked for.
struct AxisLoop {
  control::PlantState state;
  double time = 0.0;
  control::PidController pid;
  std::optional<double> pending;  // command computed at job start

  void advance_to(double t, const control::PlantParams& params) {
    if (t > time) state = control::plant_step(state, state.u, t - time, params);
    time = std::max(time, t);
  }
};

class Runner {
 public:
  Runner(const ScenarioConfig& config, std::uint64_t seed, const RunOptions& options)
      : config_(config),
        options_(options),
        n_(config.tasks.size()),
        manager_(sched::make_manager(config.scheduler.mode, config.scheduler.ffs)),
        utilization_noise_(sim::RandomStream::named(seed, "utilization")),
        loops_{AxisLoop{{}, 0.0, control::PidController(config.pid), {}},
               AxisLoop{{}, 0.0, control::PidController(config.pid), {}}} {
    for (const ScenarioTask& t : config.tasks) {
      names_.push_back(t.spec.name);
      exec_noise_.push_back(sim::RandomStream::named(seed, "exec/" + t.spec.name));
      axis_of_.push_back(t.axis);
    }

    std::vector<sim::TaskSpec> specs;
    for (const ScenarioTask& t : config.tasks) specs.push_back(t.spec);
    sim::TaskSpec scheduler;
    scheduler.name = "scheduler";
    scheduler.kind = sim::TaskKind::kScheduler;
    scheduler.period = config.scheduler.ffs.period;
    scheduler.mean_exec = config.scheduler.exec_time;
    scheduler.priority = config.scheduler.priority;
    scheduler.offset = config.scheduler.ffs.period;
    specs.push_back(scheduler);

    const double exec_stddev = std::sqrt(config.noise.exec_variance);
    const Nanos scheduler_exec = sim::from_seconds(config.scheduler.exec_time);
    kernel_.emplace(
        std::move(specs),
        [this, exec_stddev, scheduler_exec](std::size_t task, Nanos release) {
          if (task >= n_) return scheduler_exec;
          const double mean = config_.mean_exec(task, sim::to_seconds(release));
          return sim::from_seconds(
              sim::sample_execution_time(mean, exec_noise_[task], exec_stddev));
        },
        sim::Kernel::Options{options.keep_schedule});
  }

  RunResult run() {
    const auto wall_start = std::chrono::steady_clock::now();
    RunResult result;
    result.task_names = names_;

    record(0.0, RecordKind::kStart, {});

    const Nanos step = sim::from_seconds(config_.scheduler.ffs.period);
    const Nanos horizon = sim::from_seconds(config_.horizon);
    for (Nanos next = step; next < horizon; next += step) {
      handle(kernel_->advance(next));
      invoke();
    }
    handle(kernel_->advance(horizon));
    record(config_.horizon, RecordKind::kEnd, {});

    result.trace = std::move(trace_);
    result.summary = summarize(result.trace, names_);
    result.invocations = std::move(invocations_);
    if (options_.keep_schedule) {
      result.jobs.assign(kernel_->jobs().begin(), kernel_->jobs().end());
      result.slices = kernel_->slices();
    }
    for (const sim::TaskSpec& t : kernel_->tasks()) result.priorities.push_back(t.priority);
    result.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
            .count();
    return result;
  }

 private:
  AxisLoop& loop(Axis axis) { return loops_[axis == Axis::kX ? 0 : 1]; }

  void handle(const std::vector<sim::KernelEvent>& events) {
    for (const sim::KernelEvent& ev : events) {
      if (ev.task >= n_) continue;
      const double t = sim::to_seconds(ev.time);
      if (ev.kind == sim::EventKind::kStart && axis_of_[ev.task]) {
        const Axis axis = *axis_of_[ev.task];
        AxisLoop& l = loop(axis);
        l.advance_to(t, config_.plant);
        const control::Point target = config_.reference.at(t);
        l.pid.set_period(ev.period);
        l.pending = l.pid.compute(axis == Axis::kX ? target.x : target.y, l.state.x1);
      } else if (ev.kind == sim::EventKind::kComplete) {
        if (axis_of_[ev.task]) {
          AxisLoop& l = loop(*axis_of_[ev.task]);
          l.advance_to(t, config_.plant);
          if (l.pending) {
            l.state.u = *l.pending;
            l.pending.reset();
          }
        }
        record(t, RecordKind::kComplete, names_[ev.task]);
      }
    }
  }

  void invoke() {
    const double t = sim::to_seconds(kernel_->now());
    const Nanos window_start = kernel_->window_start();
    const std::vector<sim::TaskWindowUsage> usage = kernel_->take_window();
    const std::vector<double> periods = kernel_->periods();

    Invocation inv;
    inv.time = t;
    inv.sample = sim::measure_utilization(usage, periods,
                                          utilization_noise_.normal(config_.noise.r),
                                          window_start, kernel_->now());

    sched::Observation obs;
    obs.time = t;
    obs.measurement = inv.sample;
    std::vector<sched::LoopPeriod> loops;
    std::vector<std::size_t> control_tasks;
    for (std::size_t i = 0; i < n_; ++i) {
      const double mean = config_.mean_exec(i, t);
      const sim::TaskSpec& spec = config_.tasks[i].spec;
      if (spec.kind == sim::TaskKind::kControl) {
        obs.control_exec.push_back(mean);
        obs.control_periods.push_back(periods[i]);
        loops.push_back({periods[i], spec.h_min, spec.h_max});
        control_tasks.push_back(i);
      } else {
        obs.others_utilization += mean / periods[i];
      }
    }

    inv.eta = manager_->decide(obs);
    if (const auto* fuzzy = dynamic_cast<const sched::FuzzyManager*>(manager_.get())) {
      inv.ffs = fuzzy->last_step();
    }
    inv.predicted_utilization = sched::predicted_utilization(
        obs.control_exec, obs.control_periods, inv.eta, obs.others_utilization);
    inv.decision = sched::apply_periods(inv.eta, loops);
    for (std::size_t k = 0; k < control_tasks.size(); ++k) {
      kernel_->set_period(control_tasks[k], inv.decision.periods[k]);
    }

    TraceRecord& r = record(t, RecordKind::kInvoke, {});
    r.u_hat = inv.sample.value;
    r.demand = inv.sample.demand;
    r.eta = inv.eta;
    invocations_.push_back(std::move(inv));
  }

  TraceRecord& record(double t, RecordKind kind, std::string task) {
    for (AxisLoop& l : loops_) l.advance_to(t, config_.plant);
    TraceRecord r;
    r.time = t;
    r.kind = kind;
    r.task = std::move(task);
    const std::vector<double> periods = kernel_->periods();
    r.periods.assign(periods.begin(), periods.begin() + static_cast<std::ptrdiff_t>(n_));
    r.robot = {loops_[0].state.x1, loops_[1].state.x1};
    r.target = config_.reference.at(t);
    r.error = control::tracking_error(r.robot, r.target);
    const auto& misses = kernel_->deadline_misses();
    r.misses.assign(misses.begin(), misses.begin() + static_cast<std::ptrdiff_t>(n_));
    trace_.push_back(std::move(r));
    return trace_.back();
  }

  const ScenarioConfig& config_;
  RunOptions options_;
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<sim::RandomStream> exec_noise_;
  std::vector<std::optional<Axis>> axis_of_;
  std::unique_ptr<sched::PeriodManager> manager_;
  sim::RandomStream utilization_noise_;
  std::array<AxisLoop, 2> loops_;
  std::optional<sim::Kernel> kernel_;
  std::vector<TraceRecord> trace_;
  std::vector<Invocation> invocations_;
};

void write_file(const std::filesystem::path& path, auto&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path.string()));
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, fmt::format("write failed for '{}'", path.string()));
}

}  // namespace

RunResult run_experiment(const ScenarioConfig& config, std::uint64_t seed,
                         const RunOptions& options) {
  ScenarioConfig checked = config;
  validate(checked);
  return Runner(checked, seed, options).run();
}

void emit_traces(const RunResult& result, const std::filesystem::path& dir,
                 const std::optional<std::string>& table_diff) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::kIo,
                fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  }
  write_file(dir / "trace.csv", [&](std::ostream& out) {
    write_trace_csv(out, result.task_names, result.trace);
  });
  write_file(dir / "summary.txt",
             [&](std::ostream& out) { write_summary(out, result.summary); });
  if (table_diff) {
    write_file(dir / "table_diff.txt", [&](std::ostream& out) { out << *table_diff; });
  }
}

}  // namespace fuzzysched::harness
