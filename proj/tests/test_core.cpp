#include <doctest.h>

#include <algorithm>
#include <limits>

#include "sigmoment/error.hpp"
#include "sigmoment/json_io.hpp"
#include "support.hpp"

using namespace sigmoment;
using sigmoment::testing::Gen;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("rat arithmetic is exact and reduced") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(Rat(4, -6) == Rat(-2, 3));
    CHECK(Rat(4, -6).den() == 3);
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(1, 10) + Rat(2, 10) == Rat(3, 10));
}

TEST_CASE("rat floor ceil frac") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(-7, 2).frac() == Rat(1, 2));
    CHECK(Rat(6).frac() == Rat(0));
    CHECK(Rat(6).floor() == 6);
}

TEST_CASE("rat ordering") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(max(Rat(2, 3), Rat(3, 5)) == Rat(2, 3));
    CHECK(min(Rat(2, 3), Rat(3, 5)) == Rat(3, 5));
}

TEST_CASE("rat parse and str round trip") {
    for (const char* s : {"0", "5", "-5", "3/4", "-3/4", "7/1", "6/4"}) {
        Rat r = Rat::parse(s);
        CHECK(Rat::parse(r.str()) == r);
    }
    CHECK(Rat::parse("6/4").str() == "3/2");
    CHECK(Rat::parse("+2") == Rat(2));
    CHECK(code_of([] { Rat::parse("1/0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rat::parse("1.5"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rat::parse(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rat::parse("1/-2"); }) == ErrorCode::ParseError);
}

TEST_CASE("rat overflow is reported") {
    const Rat big(std::numeric_limits<std::int64_t>::max());
    CHECK(code_of([&] { (void)(big * Rat(2)); }) == ErrorCode::Overflow);
    CHECK(code_of([&] { (void)(big + Rat(1)); }) == ErrorCode::Overflow);
    // Large intermediates that reduce back into range are fine.
    CHECK(Rat(big.num(), 3) * Rat(3, big.num()) == Rat(1));
}

TEST_CASE("rat lcm") {
    CHECK(lcm(Rat(2), Rat(3)) == Rat(6));
    CHECK(lcm(Rat(3, 2), Rat(5, 4)) == Rat(15, 2));
    CHECK(lcm(Rat(1, 2), Rat(1, 3)) == Rat(1));
}

TEST_CASE("validate_task_set examples") {
    auto ts = validate_task_set({{"a", 0, 2, 1}, {"b", 0, 5, 1}});
    CHECK(ts[0].name == "a");
    CHECK(ts[1].name == "b");

    CHECK(code_of([] { validate_task_set({{"a", 0, 2, 3}}); }) == ErrorCode::ExecNotLessThanPeriod);

    auto sorted = validate_task_set({{"b", 0, 5, 1}, {"a", 0, 2, 1}});
    CHECK(sorted[0].name == "a");
    CHECK(sorted[1].name == "b");
    CHECK(sorted.input_index(0) == 1);
}

TEST_CASE("validate_task_set errors") {
    CHECK(code_of([] { validate_task_set({}); }) == ErrorCode::EmptyTaskSet);
    CHECK(code_of([] { validate_task_set({{"a", 0, 0, 1}}); }) == ErrorCode::NonPositivePeriod);
    CHECK(code_of([] { validate_task_set({{"a", 0, 2, 0}}); }) == ErrorCode::NonPositiveExec);
    CHECK(code_of([] { validate_task_set({{"a", 0, 2, 2}}); }) == ErrorCode::ExecNotLessThanPeriod);
    CHECK(code_of([] { validate_task_set({{"a", -1, 2, 1}}); }) == ErrorCode::NegativeOffset);
    CHECK(code_of([] { validate_task_set({{"a", 0, 2, 1}, {"a", 0, 3, 1}}); }) == ErrorCode::DuplicateName);
}

TEST_CASE("rms_priorities examples") {
    auto ts = validate_task_set({{"a", 0, 2, 1}, {"b", 0, 5, 1}});
    auto p = rms_priorities(ts);
    CHECK(p.rank(0) == 1);
    CHECK(p.rank(1) == 2);

    auto rev = validate_task_set({{"slow", 0, 5, 1}, {"fast", 0, 2, 1}});
    CHECK(rms_priorities(rev).rank(rev.find("fast")) == 1);

    auto tie = validate_task_set({{"x", 0, 3, 1}, {"y", 0, 3, 1}});
    auto pt = rms_priorities(tie);
    CHECK(pt.rank(tie.find("x")) == 1);
    CHECK(pt.rank(tie.find("y")) == 2);
}

TEST_CASE("priority assignment is a bijection") {
    Gen g(11);
    for (int k = 0; k < 50; ++k) {
        auto ts = g.task_set(static_cast<std::size_t>(g.integer(1, 6)), false);
        auto p = rms_priorities(ts);
        std::vector<int> r(p.ranks().begin(), p.ranks().end());
        std::sort(r.begin(), r.end());
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == static_cast<int>(i) + 1);
        auto order = p.order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(ts[order[i]].period <= ts[order[i + 1]].period);
    }
    CHECK(code_of([] { PriorityAssignment({1, 1}); }) == ErrorCode::InvalidPriority);
    CHECK(code_of([] { PriorityAssignment({0, 1}); }) == ErrorCode::InvalidPriority);
    CHECK(code_of([] { PriorityAssignment({1, 3}); }) == ErrorCode::InvalidPriority);
}

TEST_CASE("explicit priorities follow input order") {
    auto ts = validate_task_set({{"slow", 0, 5, 1}, {"fast", 0, 2, 1}});
    std::vector<int> ranks{1, 2};
    auto p = explicit_priorities(ts, ranks);
    CHECK(p.rank(ts.find("slow")) == 1);
    CHECK(p.rank(ts.find("fast")) == 2);
}

TEST_CASE("hyperperiod and utilization") {
    auto ts = sigmoment::testing::cp({{1, 2}, {1, 3}, {Rat(1, 2), Rat(5, 2)}});
    CHECK(ts.hyperperiod() == Rat(30));
    CHECK(ts.utilization() == Rat(1, 2) + Rat(1, 3) + Rat(1, 5));
}

TEST_CASE("json round trip") {
    const char* text = R"({"tasks":[{"name":"b","offset":"1/2","period":5,"exec":1},
                                     {"name":"a","period":"3/2","exec":"1/4"}]})";
    TaskSet ts = parse_task_set(text);
    CHECK(ts[0].name == "a");
    CHECK(ts[0].offset == Rat(0));
    CHECK(ts[1].offset == Rat(1, 2));
    auto j = task_set_to_json(ts);
    CHECK(j["tasks"][0]["name"] == "b");
    CHECK(task_set_from_json(j) == ts);

    Gen g(5);
    for (int k = 0; k < 50; ++k) {
        auto r = g.task_set(static_cast<std::size_t>(g.integer(1, 5)), true);
        CHECK(parse_task_set(task_set_to_json(r).dump()) == r);
    }
}

TEST_CASE("json errors carry context") {
    CHECK(code_of([] { parse_task_set("{\"tasks\": [}"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_task_set(R"({"tasks":[{"name":"a","period":2.5,"exec":1}]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_task_set(R"({"tasks":[{"name":"a","period":2}]})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_task_set(R"({"tasks":[{"name":"a","period":2,"exec":3}]})"); }) ==
          ErrorCode::ExecNotLessThanPeriod);
    try {
        parse_task_set(R"({"tasks":[{"name":"a","period":"x","exec":1}]})");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("tasks[0].period") != std::string::npos);
    }
    try {
        parse_task_set("{\n\"tasks\": [\n}");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

}  // TEST_SUITE
