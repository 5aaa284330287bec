#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigmoment/rat.hpp"
#include "sigmoment/task_set.hpp"
#include "sigmoment/timing.hpp"

namespace sigmoment {

/// Occupancy of task `task` over [t1, t2] given its (d, r) at t1.
struct OccupancyQuery {
    std::size_t task = 0;
    Rat t1;
    Rat t2;
    Rat d_at_t1;
    Rat r_at_t1;
};

/// Measure of the task's busy intervals intersected with [t1, t2].
/// Throws IntervalOutsideTrace when [t1, t2] is not inside the trace window.
Rat occupancy_from_trace(const Trace& trace, std::size_t task, const Rat& t1, const Rat& t2);

/// Carried-in work + complete periods + tail, evaluated from the timing
/// state at t1 as if every job received its full demand inside its own
/// period:  r + C * floor((L - d) / T) + min(T * frac((L - d) / T), C),
/// where L = t2 - t1. When d >= L only min(r, L) remains.
Rat occupancy_general(const OccupancyQuery& q, const TaskSpec& spec);

/// Work left at a moment where the highest-priority task's deadline
/// variable equals d: max(0, d - (T - C)).
Rat remaining_highest(const Rat& d, const Rat& exec, const Rat& period);

/// Closed-form occupancy of the highest-priority task over an interval of
/// length `length` that starts when its deadline variable equals d1.
/// Requires 0 < C1 < T1 < length and 0 < d1 <= T1.
Rat op_highest_closed(const Rat& d1, const Rat& c1, const Rat& t1, const Rat& length);

/// Closed-form occupancy of task 2 running above task 1 during one period
/// of task 1, starting when task 2's deadline variable equals d2.
/// Requires 0 < C2 < T2, 0 < T1 < T2, 0 < d2 <= T2.
///
/// The three pieces are evaluated in order (0, T2-C2], (T2-C2, T1],
/// (T1, T2]; the first matching range wins. When T2 - C2 > T1 the first
/// piece reaches past T1 and goes negative there, and when C2 > T1 the
/// third piece can exceed T1; both regimes are returned unchanged.
Rat op_second_closed(const Rat& d2, const Rat& c2, const Rat& t2, const Rat& t1);

/// Tail term for a higher-priority task j inside one period of task i that
/// starts at t_w0 (a request of i):
///   min(T_j * frac((T_i - d_j) / T_j) - sum_{q in HP(j)} OP_q(t_wj, t_w0 + T_i), C_j)
/// with t_wj the start of j's last incomplete period and the nested
/// occupancies measured on the trace.
Rat tau_e_last_period(const Trace& trace, std::size_t j, std::size_t i, const Rat& t_w0);

struct ClaimResult {
    std::vector<bool> per_task;
    bool all = false;
};

/// Interval tests from occupancy sums: task i passes iff
/// sum_{HP(i)} OP_j + OP_i <= t2 - t1, and all tasks pass iff
/// sum_i OP_i <= t2 - t1. Occupancies come from occupancy_general with the
/// given states at t1.
ClaimResult claim_interval_test(const TaskSet& ts, const PriorityAssignment& prio, const Window& window,
                                const TimingState& state_at_start);

}  // namespace sigmoment
