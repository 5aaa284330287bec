#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigmoment/bounds.hpp"
#include "sigmoment/cross_check.hpp"
#include "sigmoment/error.hpp"
#include "sigmoment/json_io.hpp"
#include "sigmoment/occupancy.hpp"
#include "sigmoment/oracle.hpp"
#include "sigmoment/report.hpp"
#include "sigmoment/schedulability.hpp"
#include "sigmoment/worstcase.hpp"

namespace py = pybind11;
using namespace sigmoment;

// Rat <-> fractions.Fraction. Ints, Fractions and "p/q" strings are accepted.
namespace pybind11::detail {
template <>
struct type_caster<Rat> {
    PYBIND11_TYPE_CASTER(Rat, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || src.is_none() || PyFloat_Check(src.ptr())) return false;
        try {
            if (py::isinstance<py::str>(src)) {
                value = Rat::parse(src.cast<std::string>());
                return true;
            }
            if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
            auto n = src.attr("numerator").cast<std::int64_t>();
            auto d = src.attr("denominator").cast<std::int64_t>();
            value = Rat(n, d);
            return true;
        } catch (const py::cast_error&) {
            return false;
        }
    }

    static handle cast(const Rat& r, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(r.num(), r.den()).release();
    }
};
}  // namespace pybind11::detail

namespace {

py::object to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(to_py(v));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
    }
}

PriorityAssignment priority(const TaskSet& ts, const py::object& p) {
    if (p.is_none()) return rms_priorities(ts);
    if (py::isinstance<py::str>(p)) {
        if (p.cast<std::string>() != "rms") throw py::value_error("priority must be 'rms' or a list of ranks");
        return rms_priorities(ts);
    }
    auto ranks = p.cast<std::vector<int>>();
    return explicit_priorities(ts, ranks);
}

Window window_of(const TaskSet& ts, const std::optional<std::pair<Rat, Rat>>& w) {
    if (w) return {w->first, w->second};
    Rat latest(0);
    for (const auto& t : ts) latest = max(latest, t.offset);
    return {Rat(0), latest + ts.hyperperiod()};
}

TaskSet make_task_set(const py::iterable& rows) {
    std::vector<TaskSpec> v;
    for (const py::handle row : rows) {
        try {
            if (py::isinstance<py::dict>(row)) {
                auto d = row.cast<py::dict>();
                TaskSpec t{d["name"].cast<std::string>(), Rat(0), d["period"].cast<Rat>(), d["exec"].cast<Rat>()};
                if (d.contains("offset")) t.offset = d["offset"].cast<Rat>();
                v.push_back(std::move(t));
            } else {
                auto [name, offset, period, exec] = row.cast<std::tuple<std::string, Rat, Rat, Rat>>();
                v.push_back({name, offset, period, exec});
            }
        } catch (const py::cast_error&) {
            throw py::type_error("task " + std::to_string(v.size()) +
                                 ": expected name, offset, period, exec as int, Fraction or 'p/q' string");
        }
    }
    return validate_task_set(std::move(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact schedulability analysis for periodic task sets";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "SigmomentError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const py::object& type = error_type.get_stored();
            py::object inst = type(e.what());
            inst.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    py::class_<TaskSpec>(m, "TaskSpec")
        .def_readonly("name", &TaskSpec::name)
        .def_readonly("offset", &TaskSpec::offset)
        .def_readonly("period", &TaskSpec::period)
        .def_readonly("exec", &TaskSpec::exec)
        .def("__repr__", [](const TaskSpec& t) {
            return "TaskSpec(" + t.name + ", offset=" + t.offset.str() + ", period=" + t.period.str() +
                   ", exec=" + t.exec.str() + ")";
        });

    py::class_<TaskSet>(m, "TaskSet")
        .def(py::init(&make_task_set), py::arg("tasks"),
             "Rows of (name, offset, period, exec) or dicts with those keys.")
        .def_static("from_json", [](const std::string& text) { return parse_task_set(text); })
        .def("to_json", [](const TaskSet& ts) { return task_set_to_json(ts).dump(); })
        .def("__len__", &TaskSet::size)
        .def("__getitem__",
             [](const TaskSet& ts, std::size_t i) {
                 if (i >= ts.size()) throw py::index_error();
                 return ts[i];
             })
        .def_property_readonly("names",
                               [](const TaskSet& ts) {
                                   std::vector<std::string> out;
                                   for (const auto& t : ts) out.push_back(t.name);
                                   return out;
                               })
        .def("hyperperiod", &TaskSet::hyperperiod)
        .def("utilization", &TaskSet::utilization)
        .def("__eq__", [](const TaskSet& a, const TaskSet& b) { return a == b; });

    m.def(
        "simulate",
        [](const TaskSet& ts, std::optional<std::pair<Rat, Rat>> window, py::object prio) {
            return to_py(trace_to_json(simulate(ts, priority(ts, prio), window_of(ts, window))));
        },
        py::arg("taskset"), py::arg("window") = py::none(), py::arg("priority") = py::none());

    m.def(
        "trace_csv",
        [](const TaskSet& ts, std::optional<std::pair<Rat, Rat>> window, py::object prio) {
            return trace_to_csv(simulate(ts, priority(ts, prio), window_of(ts, window)));
        },
        py::arg("taskset"), py::arg("window") = py::none(), py::arg("priority") = py::none());

    m.def(
        "check",
        [](const TaskSet& ts, std::optional<std::pair<Rat, Rat>> window, py::object prio) {
            auto trace = simulate(ts, priority(ts, prio), window_of(ts, window));
            return to_py(verdict_to_json(ts, window_schedulable(trace)));
        },
        py::arg("taskset"), py::arg("window") = py::none(), py::arg("priority") = py::none());

    m.def(
        "compare",
        [](const TaskSet& ts, std::optional<std::pair<Rat, Rat>> window, py::object prio) {
            return to_py(cross_check_to_json(ts, cross_check(ts, priority(ts, prio), window_of(ts, window))));
        },
        py::arg("taskset"), py::arg("window") = py::none(), py::arg("priority") = py::none());

    m.def(
        "occupancy",
        [](const TaskSet& ts, std::size_t task, const Rat& t1, const Rat& t2, py::object prio) {
            auto trace = simulate(ts, priority(ts, prio), {Rat(0), max(t2, Rat(0))});
            return occupancy_from_trace(trace, task, t1, t2);
        },
        py::arg("taskset"), py::arg("task"), py::arg("t1"), py::arg("t2"), py::arg("priority") = py::none());

    m.def("worst_case", [](const TaskSet& ts) { return to_py(worst_case_to_json(ts, n_task_wc_test(ts))); });
    m.def("bounds", [](const TaskSet& ts) { return to_py(utilization_to_json(ts, utilization_report(ts))); });

    m.def("ll_bound", &ll_bound, py::arg("n"));
    m.def("ubar_two", &ubar_two, py::arg("c1"), py::arg("t1"), py::arg("t2"));
    m.def(
        "minimize_ubar",
        [](int max_i) {
            auto r = minimize_ubar(max_i);
            return py::make_tuple(r.i, r.f_star, r.u_star);
        },
        py::arg("max_i") = 16);
    m.def("op_highest_closed", &op_highest_closed, py::arg("d1"), py::arg("c1"), py::arg("t1"), py::arg("length"));
    m.def("op_second_closed", &op_second_closed, py::arg("d2"), py::arg("c2"), py::arg("t2"), py::arg("t1"));
    m.def(
        "op1_max",
        [](const Rat& c1, const Rat& t1, const Rat& length) {
            auto r = op1_max(c1, t1, length);
            return py::make_tuple(r.value, r.worst_point);
        },
        py::arg("c1"), py::arg("t1"), py::arg("length"));
    m.def(
        "worst_deadline_set_highest",
        [](const Rat& c1, const Rat& t1, const Rat& length) {
            return to_py(interval_set_to_json(worst_deadline_set_highest(c1, t1, length)));
        },
        py::arg("c1"), py::arg("t1"), py::arg("length"));

    m.def(
        "phase_sweep",
        [](const TaskSet& ts, std::size_t task, const Rat& step) {
            oracle::SweepResult r;
            {
                py::gil_scoped_release release;
                r = oracle::phase_sweep_occupancy(ts, task, step);
            }
            return to_py(sweep_to_json(r));
        },
        py::arg("taskset"), py::arg("task"), py::arg("step") = Rat(1, 4));
}
