#pragma once

#include <optional>
#include <vector>

#include "sigmoment/rat.hpp"
#include "sigmoment/timing.hpp"

namespace sigmoment {

/// Witness of r > d at the left limit of a moment.
struct Violation {
    Rat moment;
    Rat d_left;
    Rat r_left;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct TaskVerdict {
    bool schedulable = true;
    std::optional<Violation> first_violation;
};

struct Verdict {
    std::vector<TaskVerdict> tasks;

    bool all_schedulable() const {
        for (const auto& t : tasks) {
            if (!t.schedulable) return false;
        }
        return true;
    }
};

/// Component i is true iff r_i <= d_i. Equality counts as schedulable.
std::vector<bool> instantaneous_check(const TimingState& state_left);

/// Runs instantaneous_check at the left limit of every significant moment of
/// the trace (both window ends included) and keeps the first failure per
/// task.
Verdict window_schedulable(const Trace& trace);

}  // namespace sigmoment
