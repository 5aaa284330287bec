#include "sigmoment/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sigmoment/bounds.hpp"
#include "sigmoment/cross_check.hpp"
#include "sigmoment/error.hpp"
#include "sigmoment/json_io.hpp"
#include "sigmoment/occupancy.hpp"
#include "sigmoment/oracle.hpp"
#include "sigmoment/report.hpp"
#include "sigmoment/schedulability.hpp"
#include "sigmoment/worstcase.hpp"

namespace sigmoment::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string input = "-";
    std::pair<std::string, std::string> window;
    std::string priority = "rms";
    std::string trace_format = "json";
    std::string grid_step = "1/8";
    std::string task;
    std::pair<std::string, std::string> interval;
    std::string d;
    std::string r;
    std::string objective = "phase";
    std::string params;
    bool approx = false;
    bool derive_bound = false;
};

TaskSet load(const Options& o, std::istream& in) {
    std::string text;
    if (o.input == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(o.input);
        if (!f) throw Error(ErrorCode::ParseError, "cannot open " + o.input);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return parse_task_set(text);
}

Rat rat_arg(const std::string& s, const char* what) {
    try {
        return Rat::parse(s);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

std::vector<Rat> rat_list(const std::string& s, const char* what) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(rat_arg(item, what));
    return out;
}

PriorityAssignment priority_arg(const TaskSet& ts, const std::string& s) {
    if (s == "rms") return rms_priorities(ts);
    constexpr std::string_view prefix = "explicit:";
    if (s.rfind(prefix, 0) != 0) throw Error(ErrorCode::ParseError, "--priority must be rms or explicit:<ranks>");
    std::vector<int> ranks;
    std::stringstream ss(s.substr(prefix.size()));
    for (std::string item; std::getline(ss, item, ',');) {
        int v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || p != item.data() + item.size()) {
            throw Error(ErrorCode::ParseError, "--priority: bad rank '" + item + "'");
        }
        ranks.push_back(v);
    }
    return explicit_priorities(ts, ranks);
}

/// Given window, or [0, max offset + hyperperiod].
Window window_arg(const TaskSet& ts, const Options& o) {
    if (!o.window.first.empty()) return {rat_arg(o.window.first, "--window"), rat_arg(o.window.second, "--window")};
    Rat latest(0);
    for (const auto& t : ts) latest = max(latest, t.offset);
    return {Rat(0), latest + ts.hyperperiod()};
}

/// A task name, or an index into the period-sorted set.
std::size_t task_arg(const TaskSet& ts, const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "--task is required");
    std::size_t k = ts.find(s);
    if (k < ts.size()) return k;
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && p == s.data() + s.size() && v < ts.size()) return v;
    throw Error(ErrorCode::ParseError, "--task: no task '" + s + "'");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    json order = json::array();
    for (std::size_t i : rms_priorities(ts).order()) order.push_back(ts[i].name);
    json j = task_set_to_json(ts);
    j["valid"] = true;
    j["rms_order"] = std::move(order);
    emit(out, j);
    return kOk;
}

int cmd_simulate(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    const Trace trace = simulate(ts, priority_arg(ts, o.priority), window_arg(ts, o));
    if (o.trace_format == "csv") {
        out << trace_to_csv(trace);
    } else {
        emit(out, trace_to_json(trace, {o.approx}));
    }
    return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    const Trace trace = simulate(ts, priority_arg(ts, o.priority), window_arg(ts, o));
    const Verdict v = window_schedulable(trace);
    json j = verdict_to_json(ts, v, {o.approx});
    j["window"] = json::array({rat_to_json(trace.window.start), rat_to_json(trace.window.end)});
    emit(out, j);
    return v.all_schedulable() ? kOk : kNegative;
}

int cmd_occupancy(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    const std::size_t task = task_arg(ts, o.task);
    const Rat t1 = rat_arg(o.interval.first, "--interval");
    const Rat t2 = rat_arg(o.interval.second, "--interval");
    if (o.d.empty() != o.r.empty()) throw Error(ErrorCode::ParseError, "--d and --r go together");

    json j{{"task", ts[task].name}, {"interval", json::array({rat_to_json(t1), rat_to_json(t2)})}};
    Rat value;
    if (!o.d.empty()) {
        if (t2 < t1) throw Error(ErrorCode::DomainViolation, "interval end before start");
        value = occupancy_general({task, t1, t2, rat_arg(o.d, "--d"), rat_arg(o.r, "--r")}, ts[task]);
        j["method"] = "formula";
    } else {
        const Trace trace = simulate(ts, priority_arg(ts, o.priority), {Rat(0), max(t2, Rat(0))});
        value = occupancy_from_trace(trace, task, t1, t2);
        j["method"] = "trace";
    }
    j["occupancy"] = rat_to_json(value);
    if (o.approx) j["occupancy_approx"] = value.to_double();
    emit(out, j);
    return kOk;
}

int cmd_worst_case(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    const WorstCaseReport rep = n_task_wc_test(ts);
    json j = worst_case_to_json(ts, rep, {o.approx});
    if (ts.size() == 2) {
        const Dominance dom = rms_dominance(ts);
        j["two_task"] = {{"rms", verdict_to_json(ts, two_task_wc_test(ts, TwoTaskOrder::Rms), {o.approx})},
                         {"reversed", verdict_to_json(ts, two_task_wc_test(ts, TwoTaskOrder::Reversed), {o.approx})},
                         {"rms_ok", dom.rms_ok},
                         {"reversed_ok", dom.reversed_ok}};
    }
    emit(out, j);
    return rep.all_schedulable() ? kOk : kNegative;
}

int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    json j = utilization_to_json(ts, utilization_report(ts), {o.approx});
    if (o.derive_bound) {
        const UbarMinimum m = minimize_ubar();
        j["ubar_minimum"] = {{"i", m.i}, {"f_star", m.f_star}, {"u_star", m.u_star}};
    }
    emit(out, j);
    return kOk;
}

int cmd_sweep(const Options& o, std::istream& in, std::ostream& out) {
    const Rat step = rat_arg(o.grid_step, "--grid-step");
    oracle::SweepResult res;
    if (o.objective == "phase") {
        const TaskSet ts = load(o, in);
        res = oracle::phase_sweep_occupancy(ts, task_arg(ts, o.task), step);
    } else if (o.objective == "highest" || o.objective == "second") {
        const std::vector<Rat> p = rat_list(o.params, "--params");
        if (p.size() != 3) throw Error(ErrorCode::ParseError, "--params needs three values");
        const auto obj = o.objective == "highest" ? oracle::Objective::Highest : oracle::Objective::Second;
        res = oracle::deadline_grid_max(obj, {p[0], p[1], p[2]}, step);
    } else {
        throw Error(ErrorCode::ParseError, "--objective must be phase, highest or second");
    }
    json j = sweep_to_json(res, {o.approx});
    j["objective"] = o.objective;
    emit(out, j);
    return kOk;
}

int cmd_compare(const Options& o, std::istream& in, std::ostream& out) {
    const TaskSet ts = load(o, in);
    const CrossCheck cc = cross_check(ts, priority_arg(ts, o.priority), window_arg(ts, o));
    emit(out, cross_check_to_json(ts, cc));
    return cc.agree() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact schedulability analysis for periodic task sets", "sigmoment"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* c) { c->add_option("input", o.input, "Task-set JSON path, or - for stdin"); };
    auto approx = [&](CLI::App* c) { c->add_flag("--approx", o.approx, "Add decimal approximations"); };
    auto priority = [&](CLI::App* c) {
        c->add_option("--priority", o.priority, "rms or explicit:<comma-ranks>");
    };
    auto window = [&](CLI::App* c) { c->add_option("--window", o.window, "Window start and end"); };

    auto* validate = app.add_subcommand("validate", "Check a task set and print it normalized");
    input(validate);

    auto* sim = app.add_subcommand("simulate", "Trace of significant moments over a window");
    input(sim), window(sim), priority(sim), approx(sim);
    sim->add_option("--trace-format", o.trace_format)->check(CLI::IsMember({"json", "csv"}));

    auto* check = app.add_subcommand("check", "Finite-window schedulability verdict");
    input(check), window(check), priority(check), approx(check);

    auto* occ = app.add_subcommand("occupancy", "Resource occupancy of one task over an interval");
    input(occ), priority(occ), approx(occ);
    occ->add_option("--task", o.task, "Task name or sorted index")->required();
    occ->add_option("--interval", o.interval, "Interval start and end")->required();
    occ->add_option("--d", o.d, "Deadline variable at interval start");
    occ->add_option("--r", o.r, "Remaining time at interval start");

    auto* wc = app.add_subcommand("worst-case", "Rate-monotonic worst-case test");
    input(wc), approx(wc);

    auto* bounds = app.add_subcommand("bounds", "Utilization and the Liu-Layland bound");
    input(bounds), approx(bounds);
    bounds->add_flag("--derive-bound", o.derive_bound, "Also minimize the two-task utilization ceiling");

    auto* sweep = app.add_subcommand("sweep", "Exhaustive grid search for worst-case occupancy");
    input(sweep), approx(sweep);
    sweep->add_option("--objective", o.objective, "phase, highest or second")
        ->check(CLI::IsMember({"phase", "highest", "second"}));
    sweep->add_option("--grid-step", o.grid_step, "Grid step");
    sweep->add_option("--task", o.task, "Task for the phase objective");
    sweep->add_option("--params", o.params, "C,T,L (highest) or C2,T2,T1 (second)");

    auto* compare = app.add_subcommand("compare", "Timing engine against the job-level simulator");
    input(compare), window(compare), priority(compare);

    std::vector<const char*> argv{"sigmoment"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(o, in, out);
        if (*sim) return cmd_simulate(o, in, out);
        if (*check) return cmd_check(o, in, out);
        if (*occ) return cmd_occupancy(o, in, out);
        if (*wc) return cmd_worst_case(o, in, out);
        if (*bounds) return cmd_bounds(o, in, out);
        if (*sweep) return cmd_sweep(o, in, out);
        if (*compare) return cmd_compare(o, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace sigmoment::cli
