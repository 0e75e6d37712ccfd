#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "fuzzysched/sim/task.hpp"
#include "fuzzysched/sim/time.hpp"
#include "fuzzysched/sim/utilization.hpp"

namespace fuzzysched::sim {

enum class EventKind { kRelease, kStart, kPreempt, kResume, kComplete };

std::string_view to_string(EventKind kind) noexcept;

struct KernelEvent {
  Nanos time{0};
  EventKind kind = EventKind::kRelease;
  std::size_t task = 0;
  std::size_t job = 0;  // index into Kernel::jobs()
  double period = 0.0;  // task's period when the event happened, seconds
};

/// Contiguous interval during which one job held the CPU.
struct ExecSlice {
  Nanos begin{0};
  Nanos end{0};
  std::size_t job = 0;
};

/// Fixed-priority preemptive uniprocessor.
///
/// Releases are periodic per task; each release samples an execution time via
/// the supplied sampler. The ready job with the smallest priority number runs,
/// ties broken by earlier release. Late jobs are never aborted: a task's next
/// release simply queues behind its unfinished predecessor.
///
/// A period change takes effect at the task's next release: the job released
/// then gets the new period as its relative deadline and the gap to the
/// following release.
class Kernel {
 public:
  using ExecSampler = std::function<Nanos(std::size_t task, Nanos release)>;

  struct Options {
    bool record_slices = false;
  };

  Kernel(std::vector<TaskSpec> tasks, ExecSampler sampler);
  Kernel(std::vector<TaskSpec> tasks, ExecSampler sampler, Options options);

  /// Processes everything strictly before `until` and leaves the clock at
  /// `until`. Releases due exactly at `until` wait for the next call, which
  /// gives callers a point to change periods before those releases.
  std::vector<KernelEvent> advance(Nanos until);

  Nanos now() const noexcept { return now_; }

  const std::vector<TaskSpec>& tasks() const noexcept { return tasks_; }
  double period(std::size_t task) const { return periods_.at(task); }
  std::vector<double> periods() const { return periods_; }
  /// Control tasks only. Throws out-of-range otherwise or for h <= 0.
  void set_period(std::size_t task, double seconds);

  /// Per-task usage since the previous call (or t=0), then starts a new window.
  std::vector<TaskWindowUsage> take_window();
  Nanos window_start() const noexcept { return window_start_; }

  const std::deque<JobRecord>& jobs() const noexcept { return jobs_; }
  const std::vector<ExecSlice>& slices() const noexcept { return slices_; }
  const std::vector<std::int64_t>& deadline_misses() const noexcept {
    return misses_;
  }
  /// Index of the job currently holding the CPU, if any.
  std::optional<std::size_t> running() const;

 private:
  struct Release {
    Nanos time;
    std::uint64_t seq;
    std::size_t task;
    bool operator>(const Release& o) const {
      return time != o.time ? time > o.time : seq > o.seq;
    }
  };
  struct ReadyKey {
    int priority;
    Nanos release;
    std::size_t job;
    auto operator<=>(const ReadyKey&) const = default;
  };

  void release_due(std::vector<KernelEvent>& out);
  void dispatch(std::vector<KernelEvent>& out);
  void run_until(Nanos t);
  void complete_running(std::vector<KernelEvent>& out);

  std::vector<TaskSpec> tasks_;
  std::vector<double> periods_;
  ExecSampler sampler_;
  Options options_;

  Nanos now_{0};
  std::uint64_t seq_ = 0;
  std::priority_queue<Release, std::vector<Release>, std::greater<>> releases_;
  std::set<ReadyKey> ready_;
  std::optional<std::size_t> current_;  // last job dispatched
  std::deque<JobRecord> jobs_;
  std::vector<ExecSlice> slices_;
  std::vector<std::int64_t> misses_;

  Nanos window_start_{0};
  std::vector<TaskWindowUsage> window_;
};

}  // namespace fuzzysched::sim
