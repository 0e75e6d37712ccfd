#include "fuzzysched/harness/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::harness {
namespace {

using sim::TaskKind;
using sim::TaskSpec;

[[noreturn]] void semantic(std::string_view what) {
  throw Error(ErrorKind::kConfigSemantic, std::string(what));
}

[[noreturn]] void semantic_at(const YAML::Node& node, std::string_view what) {
  const YAML::Mark m = node.Mark();
  if (m.is_null()) semantic(what);
  throw Error(ErrorKind::kConfigSemantic,
              fmt::format("line {}, column {}: {}", m.line + 1, m.column + 1,
                          what));
}

void require_map(const YAML::Node& node, std::string_view what) {
  if (!node.IsMap()) semantic_at(node, fmt::format("{} must be a mapping", what));
}

void check_keys(const YAML::Node& node, std::string_view section,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      semantic_at(kv.first,
                  fmt::format("unknown key '{}' in {}", key, section));
    }
  }
}

template <typename T>
T scalar(const YAML::Node& node, std::string_view key) {
  if (!node.IsScalar()) {
    semantic_at(node, fmt::format("'{}' must be a scalar", key));
  }
  try {
    return node.as<T>();
  } catch (const YAML::BadConversion&) {
    semantic_at(node, fmt::format("'{}' has the wrong type", key));
  }
}

template <typename T>
void read(const YAML::Node& map, std::string_view key, T& out) {
  const YAML::Node n = map[std::string(key)];
  if (n) out = scalar<T>(n, key);
}

TaskKind parse_kind(const YAML::Node& node) {
  const auto text = scalar<std::string>(node, "kind");
  if (text == "control") return TaskKind::kControl;
  if (text == "non-control") return TaskKind::kNonControl;
  semantic_at(node, fmt::format("task kind '{}' must be control or non-control",
                                text));
}

Axis parse_axis(const YAML::Node& node) {
  const auto text = scalar<std::string>(node, "axis");
  if (text == "x") return Axis::kX;
  if (text == "y") return Axis::kY;
  semantic_at(node, fmt::format("axis '{}' must be x or y", text));
}

control::Point parse_point(const YAML::Node& node, std::string_view key) {
  if (!node.IsSequence() || node.size() != 2) {
    semantic_at(node, fmt::format("'{}' must be a two-element list", key));
  }
  return {scalar<double>(node[0], key), scalar<double>(node[1], key)};
}

std::vector<ScenarioTask> parse_tasks(const YAML::Node& node) {
  if (!node.IsSequence()) semantic_at(node, "tasks must be a list");
  std::vector<ScenarioTask> tasks;
  for (const auto& item : node) {
    require_map(item, "task entry");
    check_keys(item, "task",
               {"name", "kind", "axis", "period", "priority", "h_min", "h_max",
                "offset"});
    ScenarioTask t;
    if (!item["name"]) semantic_at(item, "task needs a name");
    t.spec.name = scalar<std::string>(item["name"], "name");
    if (!item["kind"]) semantic_at(item, "task needs a kind");
    t.spec.kind = parse_kind(item["kind"]);
    if (item["axis"]) t.axis = parse_axis(item["axis"]);
    if (!item["period"]) semantic_at(item, "task needs a period");
    read(item, "period", t.spec.period);
    if (!item["priority"]) semantic_at(item, "task needs a priority");
    read(item, "priority", t.spec.priority);
    read(item, "h_min", t.spec.h_min);
    read(item, "h_max", t.spec.h_max);
    read(item, "offset", t.spec.offset);
    tasks.push_back(std::move(t));
  }
  return tasks;
}

std::vector<ExecSegment> parse_schedule(const YAML::Node& node,
                                        const std::vector<ScenarioTask>& tasks) {
  if (!node.IsSequence()) semantic_at(node, "execution_times must be a list");
  std::vector<ExecSegment> out;
  for (const auto& item : node) {
    require_map(item, "execution_times entry");
    check_keys(item, "execution_times entry", {"start", "end", "means"});
    ExecSegment seg;
    if (!item["start"] || !item["end"] || !item["means"]) {
      semantic_at(item, "segment needs start, end and means");
    }
    read(item, "start", seg.start);
    read(item, "end", seg.end);
    const YAML::Node means = item["means"];
    require_map(means, "means");
    seg.means.assign(tasks.size(), 0.0);
    std::vector<bool> seen(tasks.size(), false);
    for (const auto& kv : means) {
      const auto name = kv.first.as<std::string>();
      auto it = std::find_if(tasks.begin(), tasks.end(), [&](const ScenarioTask& t) {
        return t.spec.name == name;
      });
      if (it == tasks.end()) {
        semantic_at(kv.first, fmt::format("means names unknown task '{}'", name));
      }
      const auto i = static_cast<std::size_t>(it - tasks.begin());
      seg.means[i] = scalar<double>(kv.second, name);
      seen[i] = true;
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (!seen[i]) {
        semantic_at(means, fmt::format("segment [{}, {}] has no mean for task '{}'",
                                       seg.start, seg.end, tasks[i].spec.name));
      }
    }
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace

double ScenarioConfig::mean_exec(std::size_t task, double t) const {
  if (schedule.empty()) {
    throw Error(ErrorKind::kInvariant, "empty execution-time schedule");
  }
  for (const ExecSegment& seg : schedule) {
    if (t >= seg.start && t < seg.end) return seg.means.at(task);
  }
  return t < schedule.front().start ? schedule.front().means.at(task)
                                    : schedule.back().means.at(task);
}

std::optional<std::size_t> ScenarioConfig::find_task(std::string_view name) const {
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (tasks[i].spec.name == name) return i;
  }
  return std::nullopt;
}

ScenarioConfig default_scenario() {
  ScenarioConfig c;
  auto control = [](std::string name, Axis axis, double period, int priority) {
    ScenarioTask t;
    t.spec.name = std::move(name);
    t.spec.kind = TaskKind::kControl;
    t.spec.period = period;
    t.spec.priority = priority;
    t.spec.h_min = 0.001;
    t.spec.h_max = 0.007;
    t.axis = axis;
    return t;
  };
  ScenarioTask tau3;
  tau3.spec.name = "tau3";
  tau3.spec.kind = TaskKind::kNonControl;
  tau3.spec.period = 0.005;
  tau3.spec.priority = 1;

  // Scheduler (priority 0) > tau3 > tau1 > tau2.
  c.tasks = {control("tau1", Axis::kX, 0.003, 2),
             control("tau2", Axis::kY, 0.004, 3), tau3};
  c.schedule = {
      {0.0, 1.0, {0.0006, 0.0004, 0.0010}},
      {1.0, 2.0, {0.0012, 0.0004, 0.0020}},
      {2.0, 3.0, {0.0012, 0.0012, 0.0020}},
      {3.0, 4.0, {0.0012, 0.0012, 0.0015}},
  };
  c.pid = control::PidGains{3.0, 2.0, 0.05, 20.0};
  validate(c);
  return c;
}

void validate(ScenarioConfig& c) {
  if (!(c.horizon > 0.0)) semantic("horizon must be > 0");
  if (c.tasks.empty()) semantic("at least one task is required");

  std::set<std::string> names;
  std::set<int> priorities{c.scheduler.priority};
  int x_loops = 0;
  int y_loops = 0;
  for (const ScenarioTask& t : c.tasks) {
    if (!names.insert(t.spec.name).second) {
      semantic(fmt::format("duplicate task name '{}'", t.spec.name));
    }
    if (t.spec.name == "scheduler") semantic("task name 'scheduler' is reserved");
    if (!std::all_of(t.spec.name.begin(), t.spec.name.end(), [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
        })) {
      semantic(fmt::format("task name '{}' may only use letters, digits, '_' and '-'",
                           t.spec.name));
    }
    if (!priorities.insert(t.spec.priority).second) {
      semantic(fmt::format("task '{}': priority {} is already taken",
                           t.spec.name, t.spec.priority));
    }
    if (t.spec.kind == TaskKind::kScheduler) {
      semantic("the scheduler task is implicit; do not list it");
    }
    if (t.spec.kind == TaskKind::kControl) {
      if (!t.axis) semantic(fmt::format("control task '{}' needs an axis", t.spec.name));
      (*t.axis == Axis::kX ? x_loops : y_loops)++;
    } else if (t.axis) {
      semantic(fmt::format("non-control task '{}' cannot drive an axis", t.spec.name));
    }
  }
  if (x_loops != 1 || y_loops != 1) {
    semantic("exactly one control task per axis (x and y) is required");
  }

  if (c.schedule.empty()) semantic("execution-time schedule gap: schedule is empty");
  if (c.schedule.front().start > 0.0) {
    semantic(fmt::format("execution-time schedule gap: [0, {}] uncovered",
                         c.schedule.front().start));
  }
  if (c.schedule.front().start < 0.0) {
    semantic("execution-time schedule starts before t = 0");
  }
  for (std::size_t k = 0; k < c.schedule.size(); ++k) {
    const ExecSegment& seg = c.schedule[k];
    if (!(seg.end > seg.start)) {
      semantic(fmt::format("execution-time segment [{}, {}] is empty", seg.start,
                           seg.end));
    }
    if (k > 0) {
      const double prev_end = c.schedule[k - 1].end;
      if (seg.start > prev_end) {
        semantic(fmt::format("execution-time schedule gap: ({}, {}) uncovered",
                             prev_end, seg.start));
      }
      if (seg.start < prev_end) {
        semantic(fmt::format("execution-time schedule overlap at [{}, {}]",
                             seg.start, prev_end));
      }
    }
    if (seg.means.size() != c.tasks.size()) {
      semantic("execution-time segment must give one mean per task");
    }
    for (double m : seg.means) {
      if (!(m > 0.0)) semantic("mean execution times must be > 0");
    }
  }
  if (c.schedule.back().end < c.horizon) {
    semantic(fmt::format("execution-time schedule gap: ({}, {}] uncovered",
                         c.schedule.back().end, c.horizon));
  }

  for (std::size_t i = 0; i < c.tasks.size(); ++i) {
    c.tasks[i].spec.mean_exec = c.schedule.front().means[i];
    sim::validate(c.tasks[i].spec);
  }

  sched::validate(c.scheduler.ffs);
  if (!(c.scheduler.exec_time > 0.0 && c.scheduler.exec_time < c.scheduler.ffs.period)) {
    semantic("scheduler execution time must lie in (0, period)");
  }
  if (c.noise.exec_variance < 0.0) semantic("exec_variance must be >= 0");
  if (c.noise.r < 0.0) semantic("noise r must be >= 0");
  if (!(c.plant.gain > 0.0 && c.plant.s1 > 0.0 && c.plant.s2 > 0.0)) {
    semantic("plant gain, s1 and s2 must be > 0");
  }
  if (c.pid.kp < 0.0 || c.pid.ki < 0.0 || c.pid.kd < 0.0 || !(c.pid.n > 0.0)) {
    semantic("PID gains must be >= 0 and n > 0");
  }
  if (!(c.reference.duration > 0.0)) semantic("reference duration must be > 0");
  if (c.reference.start == c.reference.end) {
    semantic("reference start and end must differ");
  }
}

ScenarioConfig parse_scenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigSyntaxError(e.mark.line + 1, e.mark.column + 1, e.msg);
  }

  ScenarioConfig c = default_scenario();
  if (root.IsNull()) return c;
  require_map(root, "scenario document");
  check_keys(root, "scenario",
             {"horizon", "seed", "scheduler", "tasks", "execution_times", "plant",
              "pid", "reference", "noise"});

  read(root, "horizon", c.horizon);
  read(root, "seed", c.seed);

  if (const auto s = root["scheduler"]) {
    require_map(s, "scheduler");
    check_keys(s, "scheduler",
               {"mode", "desired_utilization", "period", "execution_time",
                "priority", "ge", "gec", "grf"});
    if (s["mode"]) {
      try {
        c.scheduler.mode = sched::parse_mode(scalar<std::string>(s["mode"], "mode"));
      } catch (const Error& e) {
        semantic_at(s["mode"], e.what());
      }
    }
    read(s, "desired_utilization", c.scheduler.ffs.desired_utilization);
    read(s, "period", c.scheduler.ffs.period);
    read(s, "execution_time", c.scheduler.exec_time);
    read(s, "priority", c.scheduler.priority);
    read(s, "ge", c.scheduler.ffs.ge);
    read(s, "gec", c.scheduler.ffs.gec);
    read(s, "grf", c.scheduler.ffs.grf);
  }

  if (const auto t = root["tasks"]) {
    c.tasks = parse_tasks(t);
    if (!root["execution_times"]) {
      semantic_at(t, "overriding tasks requires execution_times as well");
    }
  }
  if (const auto e = root["execution_times"]) c.schedule = parse_schedule(e, c.tasks);

  if (const auto p = root["plant"]) {
    require_map(p, "plant");
    check_keys(p, "plant", {"gain", "s2", "s1"});
    read(p, "gain", c.plant.gain);
    read(p, "s2", c.plant.s2);
    read(p, "s1", c.plant.s1);
  }
  if (const auto p = root["pid"]) {
    require_map(p, "pid");
    check_keys(p, "pid", {"kp", "ki", "kd", "n"});
    read(p, "kp", c.pid.kp);
    read(p, "ki", c.pid.ki);
    read(p, "kd", c.pid.kd);
    read(p, "n", c.pid.n);
  }
  if (const auto r = root["reference"]) {
    require_map(r, "reference");
    check_keys(r, "reference", {"start", "end", "duration"});
    if (r["start"]) c.reference.start = parse_point(r["start"], "start");
    if (r["end"]) c.reference.end = parse_point(r["end"], "end");
    read(r, "duration", c.reference.duration);
  }
  if (const auto n = root["noise"]) {
    require_map(n, "noise");
    check_keys(n, "noise", {"exec_variance", "r"});
    read(n, "exec_variance", c.noise.exec_variance);
    read(n, "r", c.noise.r);
  }

  validate(c);
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo,
                fmt::format("cannot open scenario '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_yaml(const ScenarioConfig& c) {
  auto num = [](double v) { return fmt::format("{}", v); };
  std::string out;
  out += fmt::format("horizon: {}\nseed: {}\n", num(c.horizon), c.seed);
  out += "scheduler:\n";
  out += fmt::format("  mode: {}\n", sched::to_string(c.scheduler.mode));
  out += fmt::format("  desired_utilization: {}\n",
                     num(c.scheduler.ffs.desired_utilization));
  out += fmt::format("  period: {}\n", num(c.scheduler.ffs.period));
  out += fmt::format("  execution_time: {}\n", num(c.scheduler.exec_time));
  out += fmt::format("  priority: {}\n", c.scheduler.priority);
  out += fmt::format("  ge: {}\n  gec: {}\n  grf: {}\n", num(c.scheduler.ffs.ge),
                     num(c.scheduler.ffs.gec), num(c.scheduler.ffs.grf));
  out += "tasks:\n";
  for (const ScenarioTask& t : c.tasks) {
    out += fmt::format("  - name: {}\n    kind: {}\n", t.spec.name,
                       sim::to_string(t.spec.kind));
    if (t.axis) out += fmt::format("    axis: {}\n", *t.axis == Axis::kX ? "x" : "y");
    out += fmt::format("    period: {}\n    priority: {}\n", num(t.spec.period),
                       t.spec.priority);
    if (t.spec.kind == TaskKind::kControl) {
      out += fmt::format("    h_min: {}\n    h_max: {}\n", num(t.spec.h_min),
                         num(t.spec.h_max));
    }
    if (t.spec.offset != 0.0) out += fmt::format("    offset: {}\n", num(t.spec.offset));
  }
  out += "execution_times:\n";
  for (const ExecSegment& seg : c.schedule) {
    out += fmt::format("  - start: {}\n    end: {}\n    means:\n", num(seg.start),
                       num(seg.end));
    for (std::size_t i = 0; i < c.tasks.size(); ++i) {
      out += fmt::format("      {}: {}\n", c.tasks[i].spec.name, num(seg.means[i]));
    }
  }
  out += fmt::format("plant:\n  gain: {}\n  s2: {}\n  s1: {}\n", num(c.plant.gain),
                     num(c.plant.s2), num(c.plant.s1));
  out += fmt::format("pid:\n  kp: {}\n  ki: {}\n  kd: {}\n  n: {}\n", num(c.pid.kp),
                     num(c.pid.ki), num(c.pid.kd), num(c.pid.n));
  out += fmt::format("reference:\n  start: [{}, {}]\n  end: [{}, {}]\n  duration: {}\n",
                     num(c.reference.start.x), num(c.reference.start.y),
                     num(c.reference.end.x), num(c.reference.end.y),
                     num(c.reference.duration));
  out += fmt::format("noise:\n  exec_variance: {}\n  r: {}\n",
                     num(c.noise.exec_variance), num(c.noise.r));
  return out;
}

}  // namespace fuzzysched::harness
