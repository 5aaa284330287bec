#include "sigmoment/worstcase.hpp"

#include "sigmoment/error.hpp"
#include "sigmoment/occupancy.hpp"
#include "sigmoment/timing.hpp"

namespace sigmoment {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw Error(ErrorCode::DomainViolation, what);
}

// C1 * floor(L/T1) + min(T1 * frac(L/T1), C1), valid for any L >= T1.
Rat critical_occupancy(const Rat& c1, const Rat& t1, const Rat& length) {
    Rat q = length / t1;
    return c1 * Rat(q.floor()) + min(t1 * q.frac(), c1);
}

IntervalSet deadline_set_unchecked(const Rat& c1, const Rat& t1, const Rat& length) {
    const Rat q = length / t1;
    const Rat m_t1 = t1 * Rat(q.floor());
    const Rat tail = t1 * q.frac();  // L - M*T1
    IntervalSet out;
    if (length == m_t1) {
        out.add({Rat(0), false, t1, true});
    } else if (length == m_t1 + c1) {
        out.add_point(t1);
    } else if (length < m_t1 + c1) {
        out.add({t1 - c1 + tail, true, t1, true});
    } else {
        out.add({Rat(0), false, tail - c1, true});
        out.add_point(t1);
    }
    return out;
}

}  // namespace

OpMax op1_max(const Rat& c1, const Rat& t1, const Rat& length) {
    require(Rat(0) < c1 && c1 < t1 && t1 < length, "op1_max needs 0 < C1 < T1 < L");
    return {critical_occupancy(c1, t1, length), t1};
}

IntervalSet worst_deadline_set_highest(const Rat& c1, const Rat& t1, const Rat& length) {
    require(Rat(0) < c1 && c1 < t1 && t1 < length, "worst_deadline_set_highest needs 0 < C1 < T1 < L");
    return deadline_set_unchecked(c1, t1, length);
}

SecondWorst worst_deadline_set_second(const Rat& c2, const Rat& t2, const Rat& t1) {
    require(Rat(0) < c2 && c2 < t2, "worst_deadline_set_second needs 0 < C2 < T2");
    require(Rat(0) < t1 && t1 < t2, "worst_deadline_set_second needs 0 < T1 < T2");
    SecondWorst out{c2, {}};
    if (t1 > c2) out.deadlines.add({Rat(0), false, t1 - c2, true});
    out.deadlines.add_point(t2);
    return out;
}

Verdict two_task_wc_test(const TaskSet& ts, TwoTaskOrder order) {
    require(ts.size() == 2, "two_task_wc_test needs exactly two tasks");
    const TaskSpec& a = ts[0];
    const TaskSpec& b = ts[1];
    Verdict v;
    v.tasks.resize(2);
    if (order == TwoTaskOrder::Rms) {
        Rat demand = critical_occupancy(a.exec, a.period, b.period) + b.exec;
        if (demand > b.period) {
            v.tasks[1].schedulable = false;
            v.tasks[1].first_violation = Violation{b.period, Rat(0), demand - b.period};
        }
    } else {
        Rat blocked = min(b.exec, a.period);
        if (a.exec + b.exec > a.period) {
            v.tasks[0].schedulable = false;
            v.tasks[0].first_violation = Violation{a.period, Rat(0), a.exec + blocked - a.period};
        }
    }
    return v;
}

Dominance rms_dominance(const TaskSet& ts) {
    return {two_task_wc_test(ts, TwoTaskOrder::Reversed).all_schedulable(),
            two_task_wc_test(ts, TwoTaskOrder::Rms).all_schedulable()};
}

WorstCaseReport n_task_wc_test(const TaskSet& ts) {
    const TaskSet sync = ts.synchronous();
    const PriorityAssignment prio = rms_priorities(sync);
    const Rat horizon = sync[sync.size() - 1].period;
    const Trace trace = simulate(sync, prio, {Rat(0), horizon});

    WorstCaseReport rep;
    rep.tasks.resize(sync.size());
    for (std::size_t i = 0; i < sync.size(); ++i) {
        TaskWorstCase& wc = rep.tasks[i];
        const Rat& ti = sync[i].period;
        wc.op_max = Rat(0);
        for (std::size_t j = 0; j < i; ++j) wc.op_max += occupancy_from_trace(trace, j, Rat(0), ti);
        wc.margin = ti - sync[i].exec - wc.op_max;
        wc.schedulable = wc.margin >= Rat(0);
        if (i > 0) wc.worst_deadlines = deadline_set_unchecked(sync[0].exec, sync[0].period, ti);
    }
    return rep;
}

}  // namespace sigmoment
