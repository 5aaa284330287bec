#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sigmoment/rat.hpp"
#include "sigmoment/task_set.hpp"
#include "sigmoment/timing.hpp"

namespace sigmoment::oracle {

/// A job that finishes after its deadline, or that can no longer finish in
/// time when the window closes (`doomed`: pending work exceeds the time left
/// before its deadline).
struct Miss {
    std::size_t task;
    Rat deadline;
    bool doomed = false;
    friend bool operator==(const Miss&, const Miss&) = default;
};

struct Result {
    /// Per task, sorted, maximal half-open runs clipped to the window.
    std::vector<std::vector<BusyInterval>> busy;
    /// Misses with deadline in [window.start, window.end], plus doomed jobs,
    /// ordered by (deadline, task).
    std::vector<Miss> misses;
};

/// Job-level discrete-event simulation: release and completion events in
/// exact time, one FIFO job queue per task, preemptive by priority rank.
Result simulate(const TaskSet& ts, const PriorityAssignment& prio, const Window& window);

struct SweepPoint {
    std::vector<Rat> coords;
    Rat value;
};

struct SweepResult {
    std::string grid;
    std::vector<SweepPoint> points;
    std::vector<std::vector<Rat>> argmax;
    Rat max;
};

/// Exhaustive search over release offsets of the tasks above `task`
/// (each on {0, step, 2*step, ...} below its period; `task` itself at 0).
/// For every offset vector the set is simulated past a warm-up of one
/// hyperperiod, and the higher-priority occupancy is measured over one
/// period of `task` starting at its next request. Rate-monotonic priorities.
SweepResult phase_sweep_occupancy(const TaskSet& ts, std::size_t task, const Rat& grid_step, unsigned threads = 0);

enum class Objective { Highest, Second };

/// Evaluates a closed-form occupancy over deadline values in (0, T]:
///   Highest: params (C1, T1, L), d1 in (0, T1], op_highest_closed
///   Second:  params (C2, T2, T1), d2 in (0, T2], op_second_closed
/// The grid is {k * step} plus every case boundary of the formula and
/// points just either side of each boundary.
SweepResult deadline_grid_max(Objective objective, const std::array<Rat, 3>& params, const Rat& grid_step);

}  // namespace sigmoment::oracle
