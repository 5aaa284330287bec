#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sigmoment/bounds.hpp"
#include "sigmoment/interval_set.hpp"
#include "sigmoment/oracle.hpp"
#include "sigmoment/schedulability.hpp"
#include "sigmoment/timing.hpp"
#include "sigmoment/worstcase.hpp"

namespace sigmoment {

/// JSON writers for every report. Numbers are RatStr; with `approx` each
/// rational field `k` gains a sibling `k_approx` holding a double.
struct ReportOptions {
    bool approx = false;
};

nlohmann::json trace_to_json(const Trace& trace, ReportOptions opt = {});

/// Gantt rows "task,start,end" with a header line, ordered by start time.
std::string trace_to_csv(const Trace& trace);

nlohmann::json verdict_to_json(const TaskSet& ts, const Verdict& v, ReportOptions opt = {});
nlohmann::json interval_set_to_json(const IntervalSet& s);
nlohmann::json worst_case_to_json(const TaskSet& ts, const WorstCaseReport& rep, ReportOptions opt = {});
nlohmann::json utilization_to_json(const TaskSet& ts, const UtilizationReport& rep, ReportOptions opt = {});
nlohmann::json sweep_to_json(const oracle::SweepResult& s, ReportOptions opt = {});
nlohmann::json busy_to_json(const TaskSet& ts, const std::vector<std::vector<BusyInterval>>& busy);

}  // namespace sigmoment
