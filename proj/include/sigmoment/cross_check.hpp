#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "sigmoment/oracle.hpp"
#include "sigmoment/schedulability.hpp"
#include "sigmoment/timing.hpp"

namespace sigmoment {

/// Side-by-side run of the timing engine and the oracle simulator.
struct CrossCheck {
    Trace trace;
    Verdict verdict;
    oracle::Result oracle;

    bool busy_agree = false;
    /// Per task, sorted deadlines of failing jobs. On the engine side every
    /// moment with r > d at the left limit names the job due at
    /// moment + d_left.
    std::vector<std::vector<Rat>> engine_miss_deadlines;
    std::vector<std::vector<Rat>> oracle_miss_deadlines;
    bool verdict_agree = false;

    bool agree() const { return busy_agree && verdict_agree; }
};

CrossCheck cross_check(const TaskSet& ts, const PriorityAssignment& prio, const Window& window);

nlohmann::json cross_check_to_json(const TaskSet& ts, const CrossCheck& cc);

}  // namespace sigmoment
