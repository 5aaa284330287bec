#include "sigmoment/occupancy.hpp"

#include <algorithm>

#include "sigmoment/error.hpp"

namespace sigmoment {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw Error(ErrorCode::DomainViolation, what);
}

// C * floor(x / T) + min(T * frac(x / T), C) for x >= 0: the work a task
// with fresh requests every T gets out of x time units when it is never
// blocked.
Rat periods_and_tail(const Rat& x, const Rat& c, const Rat& t) {
    Rat q = x / t;
    return c * Rat(q.floor()) + min(t * q.frac(), c);
}

}  // namespace

Rat occupancy_from_trace(const Trace& trace, std::size_t task, const Rat& t1, const Rat& t2) {
    if (t1 > t2) throw Error(ErrorCode::IntervalOutsideTrace, "interval start after end");
    if (t1 < trace.window.start || t2 > trace.window.end) {
        throw Error(ErrorCode::IntervalOutsideTrace,
                    "[" + t1.str() + ", " + t2.str() + "] outside trace window [" + trace.window.start.str() + ", " +
                        trace.window.end.str() + "]");
    }
    if (task >= trace.busy.size()) throw Error(ErrorCode::DomainViolation, "task index out of range");
    Rat total(0);
    for (const BusyInterval& b : trace.busy[task]) {
        if (b.end <= t1) continue;
        if (b.start >= t2) break;
        total += min(b.end, t2) - max(b.start, t1);
    }
    return total;
}

Rat occupancy_general(const OccupancyQuery& q, const TaskSpec& spec) {
    require(q.t1 <= q.t2, "occupancy interval start after end");
    require(q.d_at_t1 > Rat(0), "deadline variable must be positive");
    require(q.r_at_t1 >= Rat(0), "remaining time must be non-negative");
    Rat length = q.t2 - q.t1;
    if (q.d_at_t1 >= length) return min(q.r_at_t1, length);
    return q.r_at_t1 + periods_and_tail(length - q.d_at_t1, spec.exec, spec.period);
}

Rat remaining_highest(const Rat& d, const Rat& exec, const Rat& period) {
    require(Rat(0) < d && d <= period, "remaining_highest needs 0 < d <= T");
    require(Rat(0) < exec && exec < period, "remaining_highest needs 0 < C < T");
    return max(Rat(0), d - (period - exec));
}

Rat op_highest_closed(const Rat& d1, const Rat& c1, const Rat& t1, const Rat& length) {
    require(Rat(0) < c1 && c1 < t1 && t1 < length, "op_highest_closed needs 0 < C1 < T1 < L");
    require(Rat(0) < d1 && d1 <= t1, "op_highest_closed needs 0 < d1 <= T1");
    Rat q = (length - d1) / t1;
    Rat full = c1 * Rat(q.floor());
    Rat tail = min(t1 * q.frac(), c1);
    if (d1 <= t1 - c1) return full + tail;          // job at the interval start already done
    return d1 - (t1 - c1) + full + tail;             // job at the interval start still running
}

Rat op_second_closed(const Rat& d2, const Rat& c2, const Rat& t2, const Rat& t1) {
    require(Rat(0) < c2 && c2 < t2, "op_second_closed needs 0 < C2 < T2");
    require(Rat(0) < t1 && t1 < t2, "op_second_closed needs 0 < T1 < T2");
    require(Rat(0) < d2 && d2 <= t2, "op_second_closed needs 0 < d2 <= T2");
    if (d2 <= t2 - c2) return min(t1 - d2, c2);
    if (d2 <= t1) return t1 - t2 + c2;
    return d2 - (t2 - c2);
}

Rat tau_e_last_period(const Trace& trace, std::size_t j, std::size_t i, const Rat& t_w0) {
    const TaskSet& ts = trace.taskset;
    require(j < ts.size() && i < ts.size(), "task index out of range");
    require(trace.priority.higher(j, i), "task j must have higher priority than task i");

    const std::size_t k = trace.moment_index_at(t_w0);
    const Moment& m = trace.moments[k];
    if (m.time != t_w0 || std::find(m.released.begin(), m.released.end(), i) == m.released.end()) {
        throw Error(ErrorCode::DomainViolation, "t_w0 = " + t_w0.str() + " is not a request of task i");
    }
    const Rat end = t_w0 + ts[i].period;
    if (end > trace.window.end) throw Error(ErrorCode::IntervalOutsideTrace, "trace does not cover one period of task i");

    const Rat& tj = ts[j].period;
    const Rat dj = m.after.d[j];
    Rat span = ts[i].period - dj;
    if (span < Rat(0)) return Rat(0);  // next request of j falls after the window; no tail period
    Rat q = span / tj;
    Rat t_wj = t_w0 + dj + tj * Rat(q.floor());

    Rat available = tj * q.frac();
    for (std::size_t h = 0; h < ts.size(); ++h) {
        if (trace.priority.higher(h, j)) available -= occupancy_from_trace(trace, h, t_wj, end);
    }
    return min(available, ts[j].exec);
}

ClaimResult claim_interval_test(const TaskSet& ts, const PriorityAssignment& prio, const Window& window,
                                const TimingState& state_at_start) {
    require(state_at_start.size() == ts.size() && prio.size() == ts.size(), "size mismatch");
    const Rat length = window.end - window.start;
    std::vector<Rat> op(ts.size());
    Rat total(0);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        op[i] = occupancy_general({i, window.start, window.end, state_at_start.d[i], state_at_start.r[i]}, ts[i]);
        total += op[i];
    }
    ClaimResult res;
    res.per_task.resize(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rat sum = op[i];
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (prio.higher(j, i)) sum += op[j];
        }
        res.per_task[i] = sum <= length;
    }
    res.all = total <= length;
    return res;
}

}  // namespace sigmoment
