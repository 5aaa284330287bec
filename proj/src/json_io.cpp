#include "sigmoment/json_io.hpp"

#include <limits>
#include <vector>

#include "sigmoment/error.hpp"

namespace sigmoment {

using nlohmann::json;

Rat rat_from_json(const json& j, std::string_view field) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            throw Error(ErrorCode::ParseError, std::string(field) + ": integer out of range");
        }
        return Rat(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, std::string(field) + ": " + e.what());
        }
    }
    if (j.is_number_float()) {
        throw Error(ErrorCode::ParseError, std::string(field) + ": floats are not accepted, use \"p/q\"");
    }
    throw Error(ErrorCode::ParseError, std::string(field) + ": expected integer or \"p/q\" string");
}

json rat_to_json(const Rat& r) {
    if (r.is_integer()) return json(r.num());
    return json(r.str());
}

TaskSet task_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tasks")) throw Error(ErrorCode::ParseError, "top level: expected object with \"tasks\"");
    const json& arr = j.at("tasks");
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "tasks: expected array");

    std::vector<TaskSpec> raw;
    raw.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const json& t = arr[k];
        std::string path = "tasks[" + std::to_string(k) + "]";
        if (!t.is_object()) throw Error(ErrorCode::ParseError, path + ": expected object");
        for (const char* key : {"name", "period", "exec"}) {
            if (!t.contains(key)) throw Error(ErrorCode::ParseError, path + ": missing \"" + key + "\"");
        }
        if (!t.at("name").is_string()) throw Error(ErrorCode::ParseError, path + ".name: expected string");
        TaskSpec spec;
        spec.name = t.at("name").get<std::string>();
        spec.offset = t.contains("offset") ? rat_from_json(t.at("offset"), path + ".offset") : Rat(0);
        spec.period = rat_from_json(t.at("period"), path + ".period");
        spec.exec = rat_from_json(t.at("exec"), path + ".exec");
        raw.push_back(std::move(spec));
    }
    return validate_task_set(std::move(raw));
}

TaskSet parse_task_set(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return task_set_from_json(j);
}

json task_set_to_json(const TaskSet& ts) {
    std::vector<const TaskSpec*> by_input(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) by_input[ts.input_index(i)] = &ts[i];
    json tasks = json::array();
    for (const TaskSpec* t : by_input) {
        tasks.push_back({{"name", t->name},
                         {"offset", rat_to_json(t->offset)},
                         {"period", rat_to_json(t->period)},
                         {"exec", rat_to_json(t->exec)}});
    }
    return json{{"tasks", std::move(tasks)}};
}

}  // namespace sigmoment
