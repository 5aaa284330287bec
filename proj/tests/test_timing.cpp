#include <doctest.h>

#include "sigmoment/cross_check.hpp"
#include "sigmoment/error.hpp"
#include "sigmoment/oracle.hpp"
#include "sigmoment/schedulability.hpp"
#include "sigmoment/timing.hpp"
#include "support.hpp"

using namespace sigmoment;
using sigmoment::testing::Gen;
using sigmoment::testing::ocp;

namespace {

TimingState state(Rat time, std::vector<Rat> d, std::vector<Rat> r = {}) {
    TimingState s;
    s.time = time;
    s.d = d;
    s.r = r.empty() ? std::vector<Rat>(d.size(), Rat(0)) : r;
    s.o.assign(d.size(), Rat(0));
    return s;
}

std::vector<Rat> times(const Trace& t) {
    std::vector<Rat> out;
    for (const auto& m : t.moments) out.push_back(m.time);
    return out;
}

using Runs = std::vector<BusyInterval>;

}  // namespace

TEST_SUITE("timing") {

TEST_CASE("next_significant_moment examples") {
    CHECK(next_significant_moment(state(0, {2, 5}), 10) == Rat(2));
    CHECK(next_significant_moment(state(8, {2, 2}), 10) == Rat(10));
    CHECK(next_significant_moment(state(0, {7, 9}), 3) == Rat(3));
    CHECK_THROWS_AS(next_significant_moment(state(10, {1}), 10), Error);
}

TEST_CASE("evolve_to examples") {
    auto ts = ocp({{0, 1, 2}, {0, 1, 5}});
    auto prio = rms_priorities(ts);
    auto s0 = state(0, {2, 5}, {1, 1});

    auto at2 = evolve_to(s0, prio, 2);
    CHECK(at2.d == std::vector<Rat>{0, 3});
    CHECK(at2.r == std::vector<Rat>{0, 0});

    auto at1 = evolve_to(s0, prio, 1);
    CHECK(at1.d == std::vector<Rat>{1, 4});
    CHECK(at1.r == std::vector<Rat>{0, 1});

    CHECK(evolve_to(s0, prio, 0) == s0);
    CHECK_THROWS_AS(evolve_to(s0, prio, 3), Error);
}

TEST_CASE("evolve_to is a semigroup") {
    Gen g(3);
    for (int k = 0; k < 200; ++k) {
        auto ts = g.task_set(static_cast<std::size_t>(g.integer(1, 4)), false, Rat(3, 2));
        auto prio = rms_priorities(ts);
        std::vector<Rat> d, r;
        for (const auto& t : ts) {
            d.push_back(g.between(Rat(0), t.period));
            r.push_back(g.between(Rat(0), t.period));
        }
        auto s = state(0, d, r);
        Rat dmin = d[0];
        for (const Rat& x : d) dmin = min(dmin, x);
        Rat b = g.between(Rat(0), dmin);
        Rat a = g.between(Rat(0), b);
        CHECK(evolve_to(evolve_to(s, prio, a), prio, b) == evolve_to(s, prio, b));
    }
}

TEST_CASE("simulate examples") {
    auto ts = ocp({{0, 1, 2}, {0, 1, 5}});
    auto tr = simulate(ts, rms_priorities(ts), {0, 10});
    CHECK(times(tr) == std::vector<Rat>{0, 2, 4, 5, 6, 8, 10});

    auto single = ocp({{0, 1, 3}});
    auto ts1 = simulate(single, rms_priorities(single), {0, 6});
    CHECK(ts1.busy[0] == Runs{{0, 1}, {3, 4}});
    CHECK(times(ts1) == std::vector<Rat>{0, 3, 6});
}

TEST_CASE("overloaded pair misses at the end of the first period") {
    // Task 1 takes [2,3), so the first job of task 2 only gets [1,2).
    auto ts = ocp({{0, 1, 2}, {0, 2, 3}});
    auto tr = simulate(ts, rms_priorities(ts), {0, 6});
    CHECK(tr.busy[0] == Runs{{0, 1}, {2, 3}, {4, 5}});
    CHECK(tr.busy[1] == Runs{{1, 2}, {3, 4}, {5, 6}});
    CHECK(tr.state_at(3).r[1] == Rat(1));
    CHECK(tr.state_at(6).r[1] == Rat(1));
    REQUIRE(tr.misses.size() >= 1);
    CHECK(tr.misses[0] == DeadlineMiss{1, 3, 1});
}

TEST_CASE("window starting late matches a full run") {
    auto ts = ocp({{Rat(1, 2), 1, 3}, {0, 2, 5}});
    auto prio = rms_priorities(ts);
    auto full = simulate(ts, prio, {0, 30});
    auto late = simulate(ts, prio, {7, 30});
    CHECK(late.moments.front().time == Rat(7));
    CHECK(late.state_at(20) == full.state_at(20));
    CHECK(late.state_at(7) == full.state_at(7));
}

TEST_CASE("work conservation") {
    Gen g(7);
    for (int k = 0; k < 100; ++k) {
        auto ts = g.task_set(static_cast<std::size_t>(g.integer(1, 4)), true, Rat(5, 4));
        auto prio = rms_priorities(ts);
        Rat end = g.between(Rat(1), Rat(40));
        auto tr = simulate(ts, prio, {0, end});
        // Every unit released was either served or is still owed.
        const auto& last = tr.moments.back();
        Rat served(0), released(0), owed(0);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (const auto& b : tr.busy[i]) served += b.length();
            owed += last.left.r[i];
        }
        for (const auto& m : tr.moments) {
            if (m.time == end) continue;
            for (std::size_t i : m.released) released += ts[i].exec;
        }
        CHECK(served + owed == released);
        // The resource is never idle while work is pending.
        for (std::size_t w = 0; w + 1 < tr.moments.size(); ++w) {
            Rat pending(0);
            for (const Rat& r : tr.moments[w].after.r) pending += r;
            Rat gap = tr.moments[w + 1].time - tr.moments[w].time;
            Rat busy_in_gap(0);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                for (const auto& b : tr.busy[i]) {
                    Rat lo = max(b.start, tr.moments[w].time), hi = min(b.end, tr.moments[w + 1].time);
                    if (lo < hi) busy_in_gap += hi - lo;
                }
            }
            CHECK(busy_in_gap == min(pending, gap));
        }
    }
}

TEST_CASE("instantaneous_check examples") {
    CHECK(instantaneous_check(state(0, {0, 3}, {0, 0})) == std::vector<bool>{true, true});
    CHECK(instantaneous_check(state(0, {Rat(1, 2), 1}, {Rat(1, 2), 2})) == std::vector<bool>{true, false});
    CHECK(instantaneous_check(state(0, {0, 0}, {0, 0})) == std::vector<bool>{true, true});
}

TEST_CASE("window_schedulable examples") {
    auto ok = ocp({{0, 1, 2}, {0, 1, 5}});
    CHECK(window_schedulable(simulate(ok, rms_priorities(ok), {0, 10})).all_schedulable());

    auto bad = ocp({{0, 1, 2}, {0, 2, 3}});
    auto v = window_schedulable(simulate(bad, rms_priorities(bad), {0, 6}));
    CHECK(v.tasks[0].schedulable);
    CHECK_FALSE(v.tasks[1].schedulable);
    REQUIRE(v.tasks[1].first_violation);
    CHECK(*v.tasks[1].first_violation == Violation{3, 0, 1});

    auto single = ocp({{0, 1, 3}});
    CHECK(window_schedulable(simulate(single, rms_priorities(single), {0, 30})).all_schedulable());
}

TEST_CASE("checks between moments agree with the verdict") {
    Gen g(19);
    for (int k = 0; k < 100; ++k) {
        auto ts = g.task_set(static_cast<std::size_t>(g.integer(1, 4)), true, Rat(6, 5));
        auto prio = rms_priorities(ts);
        auto tr = simulate(ts, prio, {0, 30});
        auto v = window_schedulable(tr);
        for (int s = 0; s < 20; ++s) {
            Rat t = g.between(Rat(0), Rat(30));
            auto ok = instantaneous_check(tr.state_at(t));
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (v.tasks[i].schedulable) CHECK(ok[i]);
                if (!ok[i]) {
                    REQUIRE(v.tasks[i].first_violation);
                    CHECK(v.tasks[i].first_violation->moment <= t + tr.state_at(t).d[i]);
                }
            }
        }
    }
}

TEST_CASE("oracle examples") {
    auto ok = ocp({{0, 1, 2}, {0, 1, 5}});
    auto prio = rms_priorities(ok);
    auto res = oracle::simulate(ok, prio, {0, 10});
    CHECK(res.busy == simulate(ok, prio, {0, 10}).busy);
    CHECK(res.misses.empty());

    auto bad = ocp({{0, 1, 2}, {0, 2, 3}});
    auto rb = oracle::simulate(bad, rms_priorities(bad), {0, 6});
    CHECK(rb.misses == std::vector<oracle::Miss>{{1, 3, false}, {1, 6, false}});

    auto single = ocp({{Rat(1, 3), 2, 5}});
    CHECK(oracle::simulate(single, rms_priorities(single), {0, 100}).misses.empty());
}

TEST_CASE("engine and oracle agree on random sets") {
    Gen g(23);
    for (int k = 0; k < 200; ++k) {
        auto ts = g.task_set(static_cast<std::size_t>(g.integer(1, 5)), g.coin(), Rat(g.integer(3, 6), 4));
        auto ranks = rms_priorities(ts);
        Rat a = g.coin() ? Rat(0) : g.between(Rat(0), Rat(10));
        Rat b = a + g.between(Rat(0), Rat(30));
        auto cc = cross_check(ts, ranks, {a, b});
        CHECK(cc.busy_agree);
        CHECK(cc.verdict_agree);
    }
}

}  // TEST_SUITE
