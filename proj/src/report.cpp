#include "sigmoment/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "sigmoment/json_io.hpp"

namespace sigmoment {

using nlohmann::json;

namespace {

void put(json& obj, const std::string& key, const Rat& r, ReportOptions opt) {
    obj[key] = rat_to_json(r);
    if (opt.approx) obj[key + "_approx"] = r.to_double();
}

void put(json& obj, const std::string& key, const std::vector<Rat>& v, ReportOptions opt) {
    json arr = json::array();
    for (const Rat& r : v) arr.push_back(rat_to_json(r));
    obj[key] = std::move(arr);
    if (opt.approx) {
        json ap = json::array();
        for (const Rat& r : v) ap.push_back(r.to_double());
        obj[key + "_approx"] = std::move(ap);
    }
}

json state_to_json(const TimingState& s, ReportOptions opt) {
    json j = json::object();
    put(j, "d", s.d, opt);
    put(j, "r", s.r, opt);
    put(j, "o", s.o, opt);
    return j;
}

}  // namespace

json busy_to_json(const TaskSet& ts, const std::vector<std::vector<BusyInterval>>& busy) {
    json out = json::object();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        json runs = json::array();
        for (const auto& b : busy[i]) runs.push_back(json::array({rat_to_json(b.start), rat_to_json(b.end)}));
        out[ts[i].name] = std::move(runs);
    }
    return out;
}

json trace_to_json(const Trace& trace, ReportOptions opt) {
    json j;
    json tasks = json::array();
    for (const auto& t : trace.taskset) tasks.push_back(t.name);
    j["tasks"] = std::move(tasks);
    j["window"] = json::array({rat_to_json(trace.window.start), rat_to_json(trace.window.end)});

    json moments = json::array();
    for (const Moment& m : trace.moments) {
        json jm;
        put(jm, "time", m.time, opt);
        jm["left"] = state_to_json(m.left, opt);
        jm["after"] = state_to_json(m.after, opt);
        json rel = json::array();
        for (std::size_t i : m.released) rel.push_back(trace.taskset[i].name);
        jm["released"] = std::move(rel);
        moments.push_back(std::move(jm));
    }
    j["moments"] = std::move(moments);
    j["busy"] = busy_to_json(trace.taskset, trace.busy);

    json misses = json::array();
    for (const auto& m : trace.misses) {
        json jm{{"task", trace.taskset[m.task].name}};
        put(jm, "time", m.time, opt);
        put(jm, "backlog", m.backlog, opt);
        misses.push_back(std::move(jm));
    }
    j["misses"] = std::move(misses);
    return j;
}

std::string trace_to_csv(const Trace& trace) {
    std::vector<std::tuple<Rat, std::size_t, Rat>> rows;
    for (std::size_t i = 0; i < trace.busy.size(); ++i) {
        for (const auto& b : trace.busy[i]) rows.emplace_back(b.start, i, b.end);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    os << "task,start,end\n";
    for (const auto& [start, i, end] : rows) os << trace.taskset[i].name << ',' << start << ',' << end << '\n';
    return os.str();
}

json verdict_to_json(const TaskSet& ts, const Verdict& v, ReportOptions opt) {
    json tasks = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        json t{{"name", ts[i].name}, {"schedulable", v.tasks[i].schedulable}};
        if (const auto& fv = v.tasks[i].first_violation) {
            json w = json::object();
            put(w, "moment", fv->moment, opt);
            put(w, "d_left", fv->d_left, opt);
            put(w, "r_left", fv->r_left, opt);
            t["first_violation"] = std::move(w);
        } else {
            t["first_violation"] = nullptr;
        }
        tasks.push_back(std::move(t));
    }
    return json{{"schedulable", v.all_schedulable()}, {"tasks", std::move(tasks)}};
}

json interval_set_to_json(const IntervalSet& s) {
    json arr = json::array();
    for (const Interval& p : s.parts()) {
        arr.push_back({{"lo", rat_to_json(p.lo)},
                       {"lo_closed", p.lo_closed},
                       {"hi", rat_to_json(p.hi)},
                       {"hi_closed", p.hi_closed}});
    }
    return arr;
}

json worst_case_to_json(const TaskSet& ts, const WorstCaseReport& rep, ReportOptions opt) {
    json tasks = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& wc = rep.tasks[i];
        json t{{"name", ts[i].name}, {"schedulable", wc.schedulable}};
        put(t, "op_max", wc.op_max, opt);
        put(t, "margin", wc.margin, opt);
        t["worst_deadlines"] = interval_set_to_json(wc.worst_deadlines);
        tasks.push_back(std::move(t));
    }
    return json{{"schedulable", rep.all_schedulable()}, {"tasks", std::move(tasks)}};
}

json utilization_to_json(const TaskSet& ts, const UtilizationReport& rep, ReportOptions opt) {
    json j = json::object();
    json per = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        json t{{"name", ts[i].name}};
        put(t, "utilization", rep.per_task[i], opt);
        per.push_back(std::move(t));
    }
    j["tasks"] = std::move(per);
    put(j, "utilization", rep.total, opt);
    j["ll_bound"] = rep.ll_bound;
    j["ll_comparison"] = rep.ll == LlOutcome::Pass ? "pass" : rep.ll == LlOutcome::Fail ? "fail" : "inconclusive";
    j["passes_ll"] = rep.passes_ll;
    j["passes_exact"] = rep.passes_exact;
    return j;
}

json sweep_to_json(const oracle::SweepResult& s, ReportOptions opt) {
    auto coords = [](const std::vector<Rat>& c) {
        json a = json::array();
        for (const Rat& r : c) a.push_back(rat_to_json(r));
        return a;
    };
    json pts = json::array();
    for (const auto& p : s.points) {
        json jp{{"at", coords(p.coords)}};
        put(jp, "value", p.value, opt);
        pts.push_back(std::move(jp));
    }
    json am = json::array();
    for (const auto& c : s.argmax) am.push_back(coords(c));
    json j{{"grid", s.grid}, {"points", std::move(pts)}, {"argmax", std::move(am)}};
    put(j, "max", s.max, opt);
    return j;
}

}  // namespace sigmoment
