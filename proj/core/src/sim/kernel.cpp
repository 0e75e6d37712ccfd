#include "fuzzysched/sim/kernel.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "fuzzysched/error.hpp"

namespace fuzzysched::sim {

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::kRelease: return "release";
    case EventKind::kStart: return "start";
    case EventKind::kPreempt: return "preempt";
    case EventKind::kResume: return "resume";
    case EventKind::kComplete: return "complete";
  }
  return "?";
}

Kernel::Kernel(std::vector<TaskSpec> tasks, ExecSampler sampler)
    : Kernel(std::move(tasks), std::move(sampler), Options{}) {}

Kernel::Kernel(std::vector<TaskSpec> tasks, ExecSampler sampler, Options options)
    : tasks_(std::move(tasks)), sampler_(std::move(sampler)), options_(options) {
  if (tasks_.empty()) {
    throw Error(ErrorKind::kConfigSemantic, "kernel needs at least one task");
  }
  if (!sampler_) {
    throw Error(ErrorKind::kConfigSemantic, "kernel needs an execution sampler");
  }
  periods_.reserve(tasks_.size());
  window_.resize(tasks_.size());
  misses_.assign(tasks_.size(), 0);
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    validate(tasks_[i]);
    periods_.push_back(tasks_[i].period);
    window_[i].counted = tasks_[i].kind != TaskKind::kScheduler;
    window_[i].last_exec = tasks_[i].mean_exec;
    releases_.push(Release{from_seconds(tasks_[i].offset), seq_++, i});
  }
}

void Kernel::set_period(std::size_t task, double seconds) {
  if (task >= tasks_.size() || tasks_[task].kind != TaskKind::kControl) {
    throw Error(ErrorKind::kOutOfRange,
                "only control task periods can change at runtime");
  }
  if (!(seconds > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "period must be > 0");
  }
  periods_[task] = seconds;
}

std::vector<TaskWindowUsage> Kernel::take_window() {
  std::vector<TaskWindowUsage> out = window_;
  for (auto& w : window_) {
    w.jobs_released = 0;
    w.exec_sum = 0.0;
    w.busy = Nanos{0};
  }
  window_start_ = now_;
  return out;
}

std::optional<std::size_t> Kernel::running() const { return current_; }

std::vector<KernelEvent> Kernel::advance(Nanos until) {
  if (until < now_) {
    throw Error(ErrorKind::kInvariant,
                fmt::format("advance to {} ns is behind the clock ({} ns)",
                            until.count(), now_.count()));
  }
  std::vector<KernelEvent> out;
  while (now_ < until) {
    release_due(out);
    dispatch(out);

    Nanos next = until;
    if (!releases_.empty()) next = std::min(next, releases_.top().time);
    if (current_) next = std::min(next, now_ + jobs_[*current_].remaining);
    run_until(next);

    if (current_ && jobs_[*current_].remaining == Nanos{0}) {
      complete_running(out);
    }
  }
  return out;
}

void Kernel::release_due(std::vector<KernelEvent>& out) {
  while (!releases_.empty() && releases_.top().time <= now_) {
    const Release r = releases_.top();
    if (r.time < now_) {
      throw Error(ErrorKind::kInvariant,
                  fmt::format("release of task {} at {} ns is in the past",
                              r.task, r.time.count()));
    }
    releases_.pop();

    const double period = periods_[r.task];
    const Nanos step = from_seconds(period);
    if (step <= Nanos{0}) {
      throw Error(ErrorKind::kInvariant, "period rounds to zero nanoseconds");
    }
    JobRecord job;
    job.task = r.task;
    job.id = jobs_.size();
    job.release = now_;
    job.deadline = now_ + step;
    job.exec = std::max(sampler_(r.task, now_), Nanos{1});
    job.remaining = job.exec;
    job.period = period;
    jobs_.push_back(job);

    auto& w = window_[r.task];
    ++w.jobs_released;
    w.exec_sum += to_seconds(job.exec);
    w.last_exec = to_seconds(job.exec);

    const std::size_t index = jobs_.size() - 1;
    ready_.insert(ReadyKey{tasks_[r.task].priority, job.release, index});
    releases_.push(Release{now_ + step, seq_++, r.task});
    out.push_back({now_, EventKind::kRelease, r.task, index, period});
  }
}

void Kernel::dispatch(std::vector<KernelEvent>& out) {
  std::optional<std::size_t> top;
  if (!ready_.empty()) top = ready_.begin()->job;
  if (top == current_) return;

  if (current_) {
    JobRecord& prev = jobs_[*current_];
    ++prev.preemptions;
    out.push_back({now_, EventKind::kPreempt, prev.task, *current_,
                   periods_[prev.task]});
  }
  current_ = top;
  if (current_) {
    JobRecord& job = jobs_[*current_];
    const EventKind kind = job.start ? EventKind::kResume : EventKind::kStart;
    if (!job.start) job.start = now_;
    out.push_back({now_, kind, job.task, *current_, periods_[job.task]});
  }
}

void Kernel::run_until(Nanos t) {
  const Nanos dt = t - now_;
  if (current_ && dt > Nanos{0}) {
    JobRecord& job = jobs_[*current_];
    job.remaining -= dt;
    if (job.remaining < Nanos{0}) {
      throw Error(ErrorKind::kInvariant, "job overran its remaining work");
    }
    window_[job.task].busy += dt;
    if (options_.record_slices) {
      if (!slices_.empty() && slices_.back().job == *current_ &&
          slices_.back().end == now_) {
        slices_.back().end = t;
      } else {
        slices_.push_back({now_, t, *current_});
      }
    }
  }
  now_ = t;
}

void Kernel::complete_running(std::vector<KernelEvent>& out) {
  const std::size_t index = *current_;
  JobRecord& job = jobs_[index];
  job.finish = now_;
  job.missed = now_ > job.deadline;
  if (job.missed) ++misses_[job.task];
  ready_.erase(ReadyKey{tasks_[job.task].priority, job.release, index});
  out.push_back({now_, EventKind::kComplete, job.task, index,
                 periods_[job.task]});
  current_.reset();
}

}  // namespace fuzzysched::sim
