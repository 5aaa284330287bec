#include <doctest.h>

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sigmoment/cli.hpp"
#include "sigmoment/json_io.hpp"
#include "sigmoment/oracle.hpp"
#include "sigmoment/report.hpp"
#include "support.hpp"

using namespace sigmoment;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = sigmoment::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kLight = R"({"tasks":[{"name":"a","period":2,"exec":1},{"name":"b","period":5,"exec":1}]})";
const char* kTight = R"({"tasks":[{"name":"a","period":2,"exec":1},{"name":"b","period":3,"exec":1},
                                   {"name":"c","period":6,"exec":2}]})";
const char* kHeavy = R"({"tasks":[{"name":"a","period":2,"exec":1},{"name":"b","period":3,"exec":2}]})";

/// Every value under a key that holds a time or amount must re-parse.
void check_rats(const json& j) {
    static const std::set<std::string> keys{"time", "d_left", "r_left", "moment", "op_max", "margin",
                                            "utilization", "occupancy", "value", "max", "backlog"};
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (keys.count(k) && !v.is_null()) {
                const Rat r = rat_from_json(v, k);
                CHECK(rat_to_json(r) == v);
            }
            check_rats(v);
        }
    } else if (j.is_array()) {
        for (const auto& v : j) check_rats(v);
    }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check on a light set") {
    auto r = invoke({"check", "--window", "0", "10", "-"}, kLight);
    CHECK(r.code == 0);
    CHECK(r.parsed()["schedulable"] == true);
    check_rats(r.parsed());
}

TEST_CASE("check reports the first violation") {
    auto r = invoke({"check", "--window", "0", "6", "-"}, kHeavy);
    CHECK(r.code == 1);
    auto j = r.parsed();
    CHECK(j["tasks"][1]["first_violation"]["moment"] == 3);
    CHECK(j["tasks"][1]["first_violation"]["r_left"] == 1);
}

TEST_CASE("worst-case exit status and margin") {
    auto r = invoke({"worst-case", "-"}, kTight);
    CHECK(r.code == 1);
    auto j = r.parsed();
    CHECK(j["tasks"][2]["margin"] == -1);
    check_rats(j);
    CHECK(invoke({"worst-case", "-"}, kLight).code == 0);
    CHECK(invoke({"worst-case", "-"}, kLight).parsed().contains("two_task"));
}

TEST_CASE("bounds fields") {
    auto r = invoke({"bounds", "--derive-bound", "--approx", "-"}, kTight);
    CHECK(r.code == 0);
    auto j = r.parsed();
    CHECK(j["utilization"] == "7/6");
    CHECK(j.contains("ll_bound"));
    CHECK(j["passes_ll"] == false);
    CHECK(j["ubar_minimum"]["i"] == 1);
    CHECK(j["utilization_approx"].template get<double>() == doctest::Approx(7.0 / 6));
}

TEST_CASE("simulate json and csv") {
    auto r = invoke({"simulate", "--window", "0", "6", "-"}, kHeavy);
    CHECK(r.code == 0);
    check_rats(r.parsed());
    CHECK(r.parsed()["busy"]["b"].size() == 3);

    auto c = invoke({"simulate", "--window", "0", "4", "--trace-format", "csv", "-"}, kHeavy);
    CHECK(c.out == "task,start,end\na,0,1\nb,1,2\na,2,3\nb,3,4\n");
}

TEST_CASE("occupancy from trace and from state") {
    auto r = invoke({"occupancy", "--task", "a", "--interval", "0", "5", "-"}, kLight);
    CHECK(r.code == 0);
    CHECK(r.parsed()["occupancy"] == 3);
    CHECK(r.parsed()["method"] == "trace");

    auto f = invoke({"occupancy", "--task", "0", "--interval", "0", "5", "--d", "2", "--r", "1", "-"}, kLight);
    CHECK(f.parsed()["occupancy"] == 3);
    CHECK(f.parsed()["method"] == "formula");
}

TEST_CASE("explicit priorities") {
    auto r = invoke({"check", "--window", "0", "10", "--priority", "explicit:2,1", "-"}, kLight);
    CHECK(r.code == 0);
    auto bad = invoke({"check", "--priority", "explicit:1,1", "-"}, kLight);
    CHECK(bad.code == 2);
}

TEST_CASE("compare agrees") {
    auto r = invoke({"compare", "--window", "0", "12", "-"}, kHeavy);
    CHECK(r.code == 0);
    CHECK(r.parsed()["agree"] == true);
}

TEST_CASE("sweep objectives") {
    auto h = invoke({"sweep", "--objective", "highest", "--params", "1,2,5", "--grid-step", "1/8"}, "");
    CHECK(h.code == 0);
    CHECK(h.parsed()["max"] == 3);
    auto p = invoke({"sweep", "--objective", "phase", "--task", "b", "--grid-step", "1/2", "-"}, kLight);
    CHECK(p.parsed()["max"] == 3);
}

TEST_CASE("validate normalizes") {
    auto r = invoke({"validate", "-"}, R"({"tasks":[{"name":"z","period":5,"exec":1},{"name":"y","period":2,"exec":1}]})");
    CHECK(r.code == 0);
    CHECK(r.parsed()["rms_order"] == json::array({"y", "z"}));
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(invoke({}, "").code == 2);
    CHECK(invoke({"frobnicate"}, "").code == 2);
    CHECK(invoke({"check", "-"}, "{not json").code == 2);
    auto r = invoke({"check", "-"}, "{\n\"tasks\": [\n  {\"name\": \"a\", \"period\": 2, \"exec\": 5}\n]}");
    CHECK(r.code == 2);
    CHECK(r.err.find("task 'a'") != std::string::npos);
    CHECK(invoke({"check", "/nonexistent/file.json"}, "").code == 2);
    CHECK(invoke({"sweep", "--objective", "highest", "--params", "1,2"}, "").code == 2);
    CHECK(invoke({"--help"}, "").code == 0);
}

}  // TEST_SUITE
