#include "sigmoment/schedulability.hpp"

namespace sigmoment {

std::vector<bool> instantaneous_check(const TimingState& state_left) {
    std::vector<bool> ok(state_left.size());
    for (std::size_t i = 0; i < state_left.size(); ++i) ok[i] = state_left.r[i] <= state_left.d[i];
    return ok;
}

Verdict window_schedulable(const Trace& trace) {
    Verdict v;
    v.tasks.resize(trace.taskset.size());
    for (const Moment& m : trace.moments) {
        auto ok = instantaneous_check(m.left);
        for (std::size_t i = 0; i < ok.size(); ++i) {
            if (ok[i] || !v.tasks[i].schedulable) continue;
            v.tasks[i].schedulable = false;
            v.tasks[i].first_violation = Violation{m.time, m.left.d[i], m.left.r[i]};
        }
    }
    return v;
}

}  // namespace sigmoment
