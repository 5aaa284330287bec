#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sigmoment/rat.hpp"
#include "sigmoment/task_set.hpp"

namespace sigmoment {

/// RatStr wire form: a JSON integer, or a string "p/q" (also "p").
/// Floats are rejected so that inputs stay exact. `field` names the JSON
/// path for error messages.
Rat rat_from_json(const nlohmann::json& j, std::string_view field);

/// Integers serialize as JSON integers, everything else as "p/q".
nlohmann::json rat_to_json(const Rat& r);

/// `{"tasks":[{"name":..,"offset":..,"period":..,"exec":..}, ...]}`.
/// `offset` may be omitted and defaults to 0.
TaskSet task_set_from_json(const nlohmann::json& j);
TaskSet parse_task_set(std::string_view text);

/// Serializes in the caller's original input order, so parsing the result
/// reproduces an identical TaskSet.
nlohmann::json task_set_to_json(const TaskSet& ts);

}  // namespace sigmoment
