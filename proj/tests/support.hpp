#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sigmoment/rat.hpp"
#include "sigmoment/task_set.hpp"

namespace sigmoment::testing {

/// Task set from (offset, exec, period) triples named t1, t2, ...
inline TaskSet ocp(std::initializer_list<std::tuple<Rat, Rat, Rat>> rows) {
    std::vector<TaskSpec> v;
    for (const auto& [o, c, p] : rows) v.push_back({"t" + std::to_string(v.size() + 1), o, p, c});
    return validate_task_set(v);
}

/// Synchronous task set from (exec, period) pairs.
inline TaskSet cp(std::initializer_list<std::pair<Rat, Rat>> rows) {
    std::vector<TaskSpec> v;
    for (const auto& [c, p] : rows) v.push_back({"t" + std::to_string(v.size() + 1), Rat(0), p, c});
    return validate_task_set(v);
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin() { return integer(0, 1) == 1; }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// k/den with den drawn from `dens`, strictly inside (lo, hi).
    Rat between(const Rat& lo, const Rat& hi, std::initializer_list<std::int64_t> dens = {1, 2, 3, 4, 6, 8}) {
        std::int64_t den = *(dens.begin() + integer(0, static_cast<std::int64_t>(dens.size()) - 1));
        Rat a = lo * Rat(den);
        Rat b = hi * Rat(den);
        std::int64_t k_lo = a.floor() + 1;
        std::int64_t k_hi = b.ceil() - 1;
        if (k_lo > k_hi) return (lo + hi) / Rat(2);
        return Rat(integer(k_lo, k_hi), den);
    }

    /// Random task set with small quarter-grained periods so that
    /// hyperperiods stay short. Each exec lies below period * load / n.
    TaskSet task_set(std::size_t n, bool offsets, const Rat& load = Rat(1), std::int64_t max_period_quarters = 32) {
        std::vector<TaskSpec> v;
        for (std::size_t i = 0; i < n; ++i) {
            Rat period(integer(4, max_period_quarters), coin() ? 4 : 2);
            if (period < Rat(1)) period = Rat(1);
            Rat cap = min(period * load / Rat(static_cast<std::int64_t>(n)), period);
            Rat exec = between(Rat(0), cap, {4, 8});
            Rat off = offsets ? Rat(integer(0, 4 * period.ceil()), 4) : Rat(0);
            v.push_back({"t" + std::to_string(i + 1), off, period, exec});
        }
        return validate_task_set(v);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace sigmoment::testing
