#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sigmoment/rat.hpp"

namespace sigmoment {

/// Timing characteristics of one periodic system: first request at
/// `offset`, a new request every `period`, each needing `exec` units of the
/// shared resource.
struct TaskSpec {
    std::string name;
    Rat offset{0};
    Rat period{1};
    Rat exec{0};

    Rat utilization() const { return exec / period; }
    friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

/// Validated, period-sorted task set. Index 0 is the shortest period; ties
/// keep their input order, which is remembered in `input_index`.
class TaskSet {
public:
    TaskSet() = default;

    std::size_t size() const noexcept { return tasks_.size(); }
    const TaskSpec& operator[](std::size_t i) const { return tasks_[i]; }
    std::span<const TaskSpec> tasks() const noexcept { return tasks_; }
    auto begin() const noexcept { return tasks_.begin(); }
    auto end() const noexcept { return tasks_.end(); }

    /// Position of task i in the caller's original list.
    std::size_t input_index(std::size_t i) const { return input_index_[i]; }
    /// Index of the task with the given name, or size() when absent.
    std::size_t find(std::string_view name) const;

    /// Same tasks with every offset replaced; used for phase sweeps.
    TaskSet with_offsets(std::span<const Rat> offsets) const;
    /// Same tasks released synchronously at time 0.
    TaskSet synchronous() const;

    Rat hyperperiod() const;
    Rat utilization() const;

    friend bool operator==(const TaskSet&, const TaskSet&) = default;

private:
    friend TaskSet validate_task_set(std::vector<TaskSpec> raw);

    std::vector<TaskSpec> tasks_;
    std::vector<std::size_t> input_index_;
};

/// Checks every task against the model assumptions and sorts by
/// (period, input position). Throws Error with the first violation found.
TaskSet validate_task_set(std::vector<TaskSpec> raw);

/// Static priority ranks, indexed like the TaskSet; rank 1 is the highest.
class PriorityAssignment {
public:
    PriorityAssignment() = default;
    /// Throws Error{InvalidPriority} unless `ranks` is a permutation of 1..N.
    explicit PriorityAssignment(std::vector<int> ranks);

    std::size_t size() const noexcept { return ranks_.size(); }
    int rank(std::size_t task) const { return ranks_[task]; }
    std::span<const int> ranks() const noexcept { return ranks_; }

    /// Task indices from highest to lowest priority.
    std::vector<std::size_t> order() const;
    /// True when task `a` preempts task `b`.
    bool higher(std::size_t a, std::size_t b) const { return ranks_[a] < ranks_[b]; }

    friend bool operator==(const PriorityAssignment&, const PriorityAssignment&) = default;

private:
    std::vector<int> ranks_;
};

/// Rate-monotonic ranks: shorter period first, equal periods by input order.
PriorityAssignment rms_priorities(const TaskSet& ts);

/// Ranks given in the caller's input order (as in the task-set file),
/// remapped onto the sorted TaskSet indices.
PriorityAssignment explicit_priorities(const TaskSet& ts, std::span<const int> ranks_in_input_order);

}  // namespace sigmoment
