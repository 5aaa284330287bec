#pragma once

#include <vector>

#include "sigmoment/interval_set.hpp"
#include "sigmoment/rat.hpp"
#include "sigmoment/schedulability.hpp"
#include "sigmoment/task_set.hpp"

namespace sigmoment {

struct OpMax {
    Rat value;
    Rat worst_point;  // deadline variable of the higher-priority task
};

/// Largest occupancy of the highest-priority task over an interval of
/// length L: C1 * floor(L/T1) + min(T1 * frac(L/T1), C1), reached at d1 = T1.
/// Requires 0 < C1 < T1 < L.
OpMax op1_max(const Rat& c1, const Rat& t1, const Rat& length);

/// Every d1 in (0, T1] at which op_highest_closed reaches op1_max.
/// With M = floor(L/T1):
///   L == M*T1            -> (0, T1]
///   L == M*T1 + C1       -> {T1}
///   M*T1 < L < M*T1 + C1 -> [T1 - C1 + T1*frac(L/T1), T1]
///   otherwise            -> (0, T1*frac(L/T1) - C1] U {T1}
IntervalSet worst_deadline_set_highest(const Rat& c1, const Rat& t1, const Rat& length);

struct SecondWorst {
    Rat op_max;
    IntervalSet deadlines;
};

/// Maximum of op_second_closed over d2 (always C2) and where it is reached:
/// {T2} when T1 <= C2, otherwise (0, T1 - C2] U {T2}.
SecondWorst worst_deadline_set_second(const Rat& c2, const Rat& t2, const Rat& t1);

enum class TwoTaskOrder { Rms, Reversed };

/// Infinite-horizon verdict for a two-task set. The witness of a failing
/// task is the left limit at the end of its first period after a
/// synchronous release, where d = 0 and r is the uncovered demand.
Verdict two_task_wc_test(const TaskSet& ts, TwoTaskOrder order);

struct Dominance {
    bool reversed_ok = false;
    bool rms_ok = false;
};

/// Both two-task conditions side by side; reversed_ok implies rms_ok.
Dominance rms_dominance(const TaskSet& ts);

struct TaskWorstCase {
    /// Sum of higher-priority occupancy over [0, T_i] from a synchronous release.
    Rat op_max;
    /// Deadline values of the top-priority task that attain its own maximum
    /// occupancy over an interval of length T_i; empty for the top task.
    IntervalSet worst_deadlines;
    /// T_i - C_i - op_max.
    Rat margin;
    bool schedulable = false;
};

struct WorstCaseReport {
    std::vector<TaskWorstCase> tasks;

    bool all_schedulable() const {
        for (const auto& t : tasks) {
            if (!t.schedulable) return false;
        }
        return true;
    }
};

/// Rate-monotonic worst-case test: for each task i, measure the
/// higher-priority occupancy over one period of i starting at the critical
/// instant (exact simulation) and require it plus C_i to fit in T_i.
/// Offsets in `ts` are ignored.
WorstCaseReport n_task_wc_test(const TaskSet& ts);

}  // namespace sigmoment
