#pragma once

#include <cstddef>
#include <vector>

#include "sigmoment/rat.hpp"
#include "sigmoment/task_set.hpp"

namespace sigmoment {

/// Z(t) = (D, R, O) at `time`, indexed like the TaskSet.
///
///   d[i]  time until the next request of task i
///   r[i]  work still owed to task i (its current job plus any backlog)
///   o[i]  time since the latest request of i, frozen once that job finishes
struct TimingState {
    Rat time{0};
    std::vector<Rat> d;
    std::vector<Rat> r;
    std::vector<Rat> o;

    std::size_t size() const noexcept { return d.size(); }
    friend bool operator==(const TimingState&, const TimingState&) = default;
};

/// State at time 0 before any request is processed: d = offsets, r = o = 0.
TimingState initial_state(const TaskSet& ts);

/// state.time + min{d_1, ..., d_N, t_end - state.time}.
/// Throws WindowExhausted if state.time >= t_end.
Rat next_significant_moment(const TimingState& state, const Rat& t_end);

/// Continuous evolution from `state` to `t` with no request strictly in
/// between: d decreases at unit rate, the resource is granted in priority
/// order. Returns the left limit at t. Throws ReleaseSkipped when t lies
/// past the next request.
TimingState evolve_to(const TimingState& state, const PriorityAssignment& prio, const Rat& t);

/// Applies the jumps of every request due at state.time (d == 0):
/// d <- T, r <- r + C, o <- 0. Writes the indices of released tasks to
/// `released` when given.
TimingState apply_releases(const TaskSet& ts, const TimingState& left, std::vector<std::size_t>* released = nullptr);

struct Moment {
    Rat time;
    TimingState left;   // limit from the left
    TimingState after;  // after request jumps
    std::vector<std::size_t> released;
};

/// Half-open [start, end).
struct BusyInterval {
    Rat start;
    Rat end;
    Rat length() const { return end - start; }
    friend bool operator==(const BusyInterval&, const BusyInterval&) = default;
};

/// A request arriving while the previous job of the same task still has
/// work left, i.e. that job missed its deadline at `time`.
struct DeadlineMiss {
    std::size_t task;
    Rat time;
    Rat backlog;
    friend bool operator==(const DeadlineMiss&, const DeadlineMiss&) = default;
};

struct Window {
    Rat start;
    Rat end;
};

struct Trace {
    TaskSet taskset;
    PriorityAssignment priority;
    Window window;
    std::vector<Moment> moments;
    /// Per task, sorted and maximal (adjacent runs are merged).
    std::vector<std::vector<BusyInterval>> busy;
    std::vector<DeadlineMiss> misses;

    /// Left-limit state at any t inside the window.
    TimingState state_at(const Rat& t) const;
    /// Index of the last moment with time <= t.
    std::size_t moment_index_at(const Rat& t) const;
};

/// Simulates from time 0 (d = offsets) and records the window [start, end].
Trace simulate(const TaskSet& ts, const PriorityAssignment& prio, const Window& window);

/// Records [seed.time, t_end] starting from an arbitrary left-limit state.
Trace simulate_from(const TaskSet& ts, const PriorityAssignment& prio, const TimingState& seed, const Rat& t_end);

/// Appends [start, end) to a sorted interval list, merging with the last
/// entry when they touch.
void append_busy(std::vector<BusyInterval>& list, const Rat& start, const Rat& end);

}  // namespace sigmoment
