#include "sigmoment/cross_check.hpp"

#include <algorithm>

#include "sigmoment/json_io.hpp"
#include "sigmoment/report.hpp"

namespace sigmoment {

CrossCheck cross_check(const TaskSet& ts, const PriorityAssignment& prio, const Window& window) {
    CrossCheck cc;
    cc.trace = simulate(ts, prio, window);
    cc.verdict = window_schedulable(cc.trace);
    cc.oracle = oracle::simulate(ts, prio, window);

    cc.busy_agree = cc.trace.busy == cc.oracle.busy;

    const std::size_t n = ts.size();
    cc.engine_miss_deadlines.resize(n);
    cc.oracle_miss_deadlines.resize(n);
    for (const Moment& m : cc.trace.moments) {
        const auto ok = instantaneous_check(m.left);
        for (std::size_t i = 0; i < n; ++i) {
            if (!ok[i]) cc.engine_miss_deadlines[i].push_back(m.time + m.left.d[i]);
        }
    }
    for (auto& v : cc.engine_miss_deadlines) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (const auto& m : cc.oracle.misses) cc.oracle_miss_deadlines[m.task].push_back(m.deadline);
    for (auto& v : cc.oracle_miss_deadlines) std::sort(v.begin(), v.end());
    cc.verdict_agree = cc.engine_miss_deadlines == cc.oracle_miss_deadlines;
    return cc;
}

nlohmann::json cross_check_to_json(const TaskSet& ts, const CrossCheck& cc) {
    using nlohmann::json;
    json tasks = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto list = [](const std::vector<Rat>& v) {
            json a = json::array();
            for (const Rat& r : v) a.push_back(rat_to_json(r));
            return a;
        };
        tasks.push_back({{"name", ts[i].name},
                         {"engine_misses", list(cc.engine_miss_deadlines[i])},
                         {"oracle_misses", list(cc.oracle_miss_deadlines[i])},
                         {"busy_agree", cc.trace.busy[i] == cc.oracle.busy[i]}});
    }
    return json{{"agree", cc.agree()},
                {"busy_agree", cc.busy_agree},
                {"verdict_agree", cc.verdict_agree},
                {"tasks", std::move(tasks)},
                {"engine_busy", busy_to_json(ts, cc.trace.busy)},
                {"oracle_busy", busy_to_json(ts, cc.oracle.busy)}};
}

}  // namespace sigmoment
