#include "sigmoment/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <thread>

#include "sigmoment/error.hpp"
#include "sigmoment/occupancy.hpp"

namespace sigmoment::oracle {

namespace {

struct Job {
    Rat deadline;
    Rat remaining;
};

struct Release {
    Rat time;
    std::size_t task;
    bool operator>(const Release& o) const { return time != o.time ? time > o.time : task > o.task; }
};

void push_run(std::vector<BusyInterval>& runs, const Rat& s, const Rat& e) {
    if (!(s < e)) return;
    if (!runs.empty() && runs.back().end == s) {
        runs.back().end = e;
        return;
    }
    runs.push_back({s, e});
}

}  // namespace

Result simulate(const TaskSet& ts, const PriorityAssignment& prio, const Window& window) {
    const std::size_t n = ts.size();
    if (prio.size() != n) throw Error(ErrorCode::DomainViolation, "priority size mismatch");
    if (window.start < Rat(0) || window.end < window.start) throw Error(ErrorCode::DomainViolation, "bad window");

    const Rat& lo = window.start;
    const Rat& hi = window.end;
    auto in_window = [&](const Rat& x) { return lo <= x && x <= hi; };

    std::priority_queue<Release, std::vector<Release>, std::greater<>> releases;
    for (std::size_t i = 0; i < n; ++i) releases.push({ts[i].offset, i});

    std::vector<std::deque<Job>> ready(n);
    Result res;
    res.busy.resize(n);

    // Tasks by rank so the dispatcher takes the first non-empty queue.
    std::vector<std::size_t> by_rank(n);
    for (std::size_t i = 0; i < n; ++i) by_rank[prio.rank(i) - 1] = i;

    Rat now(0);
    for (;;) {
        if (now == hi) {
            for (std::size_t i = 0; i < n; ++i) {
                Rat owed(0);
                for (const Job& job : ready[i]) {
                    owed += job.remaining;
                    if (job.deadline <= hi) {
                        if (in_window(job.deadline)) res.misses.push_back({i, job.deadline, false});
                    } else if (owed > job.deadline - hi) {
                        res.misses.push_back({i, job.deadline, true});
                    }
                }
            }
            break;
        }

        while (!releases.empty() && releases.top().time == now) {
            std::size_t i = releases.top().task;
            releases.pop();
            ready[i].push_back({now + ts[i].period, ts[i].exec});
            releases.push({now + ts[i].period, i});
        }

        Rat next = hi;
        if (!releases.empty() && releases.top().time < next) next = releases.top().time;

        std::size_t running = n;
        for (std::size_t i : by_rank) {
            if (!ready[i].empty()) {
                running = i;
                break;
            }
        }
        if (running == n) {
            now = next;
            continue;
        }

        Job& job = ready[running].front();
        Rat stop = min(now + job.remaining, next);
        push_run(res.busy[running], max(now, lo), min(stop, hi));
        job.remaining -= stop - now;
        if (job.remaining == Rat(0)) {
            if (stop > job.deadline && in_window(job.deadline)) res.misses.push_back({running, job.deadline, false});
            ready[running].pop_front();
        }
        now = stop;
    }

    std::sort(res.misses.begin(), res.misses.end(), [](const Miss& a, const Miss& b) {
        return a.deadline != b.deadline ? a.deadline < b.deadline : a.task < b.task;
    });
    return res;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < count; k += threads) fn(k);
        });
    }
}

void reduce(SweepResult& out) {
    if (out.points.empty()) throw Error(ErrorCode::DomainViolation, "empty sweep grid");
    out.max = out.points.front().value;
    for (const auto& p : out.points) out.max = max(out.max, p.value);
    for (const auto& p : out.points) {
        if (p.value == out.max) out.argmax.push_back(p.coords);
    }
}

}  // namespace

SweepResult phase_sweep_occupancy(const TaskSet& ts, std::size_t task, const Rat& grid_step, unsigned threads) {
    if (task >= ts.size()) throw Error(ErrorCode::DomainViolation, "task index out of range");
    if (grid_step <= Rat(0)) throw Error(ErrorCode::DomainViolation, "grid step must be positive");

    SweepResult out;
    out.grid = "offsets of tasks 0.." + std::to_string(task) + " in steps of " + grid_step.str() +
               " below each period; task " + std::to_string(task) + " fixed at 0";
    if (task == 0) {
        out.points.push_back({{}, Rat(0)});
        reduce(out);
        return out;
    }

    // Lower-priority tasks cannot change what the tasks above `task` do.
    std::vector<TaskSpec> head(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(task) + 1);
    for (auto& t : head) t.offset = Rat(0);
    const TaskSet base = validate_task_set(head);
    const PriorityAssignment prio = rms_priorities(base);
    const Rat hyper = base.hyperperiod();
    const Rat& ti = base[task].period;

    std::vector<std::vector<Rat>> grid{{}};
    for (std::size_t j = 0; j < task; ++j) {
        std::vector<std::vector<Rat>> grown;
        for (Rat off(0); off < base[j].period; off += grid_step) {
            for (const auto& g : grid) {
                auto v = g;
                v.push_back(off);
                grown.push_back(std::move(v));
            }
        }
        grid = std::move(grown);
    }

    out.points.resize(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t k) {
        std::vector<Rat> offsets = grid[k];
        Rat latest(0);
        for (const Rat& o : offsets) latest = max(latest, o);
        offsets.push_back(Rat(0));
        const TaskSet phased = base.with_offsets(offsets);
        // First request of `task` after every other task has started and a
        // full hyperperiod has elapsed.
        const Rat start = ti * Rat(((latest + hyper) / ti).ceil());
        const Result r = oracle::simulate(phased, prio, {start, start + ti});
        Rat sum(0);
        for (std::size_t j = 0; j < task; ++j) {
            for (const auto& b : r.busy[j]) sum += b.length();
        }
        offsets.pop_back();
        out.points[k] = {std::move(offsets), sum};
    });
    reduce(out);
    return out;
}

SweepResult deadline_grid_max(Objective objective, const std::array<Rat, 3>& params, const Rat& grid_step) {
    if (grid_step <= Rat(0)) throw Error(ErrorCode::DomainViolation, "grid step must be positive");
    const auto& [a, b, c] = params;

    Rat top;
    std::vector<Rat> boundaries;
    std::function<Rat(const Rat&)> eval;
    SweepResult out;
    if (objective == Objective::Highest) {
        // (C1, T1, L)
        top = b;
        const Rat tail = b * (c / b).frac();
        boundaries = {b - a, tail, tail - a, b - a + tail, b};
        eval = [&](const Rat& d) { return op_highest_closed(d, a, b, c); };
        out.grid = "d1 in (0, " + b.str() + "]";
    } else {
        // (C2, T2, T1)
        top = b;
        boundaries = {b - a, c, c - a, b};
        eval = [&](const Rat& d) { return op_second_closed(d, a, b, c); };
        out.grid = "d2 in (0, " + b.str() + "]";
    }
    out.grid += " step " + grid_step.str() + " plus case boundaries";

    const Rat eps = grid_step / Rat(64);
    std::vector<Rat> ds;
    for (Rat d = grid_step; d <= top; d += grid_step) ds.push_back(d);
    for (const Rat& x : boundaries) {
        for (const Rat& y : {x - eps, x, x + eps}) ds.push_back(y);
    }
    ds.push_back(eps);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

    for (const Rat& d : ds) {
        if (d <= Rat(0) || d > top) continue;
        out.points.push_back({{d}, eval(d)});
    }
    reduce(out);
    return out;
}

}  // namespace sigmoment::oracle
