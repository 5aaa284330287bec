#include "sigmoment/timing.hpp"

#include <algorithm>

#include "sigmoment/error.hpp"

namespace sigmoment {

TimingState initial_state(const TaskSet& ts) {
    TimingState s;
    s.time = Rat(0);
    s.d.reserve(ts.size());
    for (const auto& t : ts) s.d.push_back(t.offset);
    s.r.assign(ts.size(), Rat(0));
    s.o.assign(ts.size(), Rat(0));
    return s;
}

Rat next_significant_moment(const TimingState& state, const Rat& t_end) {
    if (state.time >= t_end) {
        throw Error(ErrorCode::WindowExhausted, "time " + state.time.str() + " is not before window end " + t_end.str());
    }
    Rat step = t_end - state.time;
    for (const Rat& d : state.d) {
        if (d <= Rat(0)) throw Error(ErrorCode::DomainViolation, "deadline variable must be positive between moments");
        if (d < step) step = d;
    }
    return state.time + step;
}

TimingState evolve_to(const TimingState& state, const PriorityAssignment& prio, const Rat& t) {
    if (t < state.time) throw Error(ErrorCode::DomainViolation, "cannot evolve backwards to " + t.str());
    const Rat dt = t - state.time;
    for (const Rat& d : state.d) {
        if (d < dt) throw Error(ErrorCode::ReleaseSkipped, "a request falls before " + t.str());
    }
    if (dt == Rat(0)) return state;

    TimingState next = state;
    next.time = t;
    // Work of all higher-priority tasks at t_w runs first; task i starts only
    // after it, so r_i(t) = max(0, r_i(t_w) - max(0, dt - sum_{HP(i)} r_j(t_w))).
    Rat ahead(0);
    for (std::size_t i : prio.order()) {
        next.d[i] = state.d[i] - dt;
        const Rat& ri = state.r[i];
        if (ri > Rat(0)) {
            Rat served = max(Rat(0), dt - ahead);
            next.r[i] = max(Rat(0), ri - served);
            // o grows until the job completes at t_w + ahead + r_i.
            next.o[i] = state.o[i] + min(dt, ahead + ri);
        }
        ahead += ri;
    }
    return next;
}

TimingState apply_releases(const TaskSet& ts, const TimingState& left, std::vector<std::size_t>* released) {
    TimingState after = left;
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left.d[i] == Rat(0)) {
            after.d[i] = ts[i].period;
            after.r[i] = left.r[i] + ts[i].exec;
            after.o[i] = Rat(0);
            if (released) released->push_back(i);
        }
    }
    return after;
}

void append_busy(std::vector<BusyInterval>& list, const Rat& start, const Rat& end) {
    if (end <= start) return;
    if (!list.empty() && list.back().end == start) {
        list.back().end = end;
    } else {
        list.push_back({start, end});
    }
}

Trace simulate_from(const TaskSet& ts, const PriorityAssignment& prio, const TimingState& seed, const Rat& t_end) {
    if (prio.size() != ts.size() || seed.size() != ts.size()) {
        throw Error(ErrorCode::DomainViolation, "task set, priorities and state disagree in size");
    }
    if (t_end < seed.time) throw Error(ErrorCode::DomainViolation, "window end before start");

    Trace tr;
    tr.taskset = ts;
    tr.priority = prio;
    tr.window = {seed.time, t_end};
    tr.busy.resize(ts.size());
    const auto order = prio.order();

    TimingState left = seed;
    for (;;) {
        Moment m;
        m.time = left.time;
        m.after = apply_releases(ts, left, &m.released);
        for (std::size_t i : m.released) {
            if (left.r[i] > Rat(0)) tr.misses.push_back({i, m.time, left.r[i]});
        }
        m.left = std::move(left);
        tr.moments.push_back(std::move(m));
        const TimingState& after = tr.moments.back().after;
        if (after.time == t_end) break;

        Rat next = next_significant_moment(after, t_end);
        Rat cursor = after.time;
        for (std::size_t i : order) {
            if (cursor >= next) break;
            if (after.r[i] > Rat(0)) {
                Rat stop = min(cursor + after.r[i], next);
                append_busy(tr.busy[i], cursor, stop);
                cursor = stop;
            }
        }
        left = evolve_to(after, prio, next);
    }
    return tr;
}

Trace simulate(const TaskSet& ts, const PriorityAssignment& prio, const Window& window) {
    if (window.start < Rat(0)) throw Error(ErrorCode::DomainViolation, "window start must be >= 0");
    if (window.end < window.start) throw Error(ErrorCode::DomainViolation, "window end before start");
    TimingState left = initial_state(ts);
    while (left.time < window.start) {
        TimingState after = apply_releases(ts, left);
        left = evolve_to(after, prio, next_significant_moment(after, window.start));
    }
    return simulate_from(ts, prio, left, window.end);
}

std::size_t Trace::moment_index_at(const Rat& t) const {
    if (t < window.start || t > window.end) throw Error(ErrorCode::IntervalOutsideTrace, "time " + t.str() + " outside trace");
    auto it = std::upper_bound(moments.begin(), moments.end(), t, [](const Rat& x, const Moment& m) { return x < m.time; });
    return static_cast<std::size_t>(it - moments.begin()) - 1;
}

TimingState Trace::state_at(const Rat& t) const {
    const Moment& m = moments[moment_index_at(t)];
    if (m.time == t) return m.left;
    return evolve_to(m.after, priority, t);
}

}  // namespace sigmoment
