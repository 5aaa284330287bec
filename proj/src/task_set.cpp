#include "sigmoment/task_set.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sigmoment/error.hpp"

namespace sigmoment {

TaskSet validate_task_set(std::vector<TaskSpec> raw) {
    if (raw.empty()) throw Error(ErrorCode::EmptyTaskSet, "task set has no tasks");

    std::unordered_set<std::string> names;
    for (const auto& t : raw) {
        if (t.period <= Rat(0)) throw Error(ErrorCode::NonPositivePeriod, "task '" + t.name + "' period " + t.period.str());
        if (t.exec <= Rat(0)) throw Error(ErrorCode::NonPositiveExec, "task '" + t.name + "' exec " + t.exec.str());
        if (t.exec >= t.period) {
            throw Error(ErrorCode::ExecNotLessThanPeriod,
                        "task '" + t.name + "' exec " + t.exec.str() + " >= period " + t.period.str());
        }
        if (t.offset < Rat(0)) throw Error(ErrorCode::NegativeOffset, "task '" + t.name + "' offset " + t.offset.str());
        if (!names.insert(t.name).second) throw Error(ErrorCode::DuplicateName, "task name '" + t.name + "' repeated");
    }

    std::vector<std::size_t> idx(raw.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return raw[a].period < raw[b].period; });

    TaskSet ts;
    ts.tasks_.reserve(raw.size());
    for (std::size_t i : idx) ts.tasks_.push_back(std::move(raw[i]));
    ts.input_index_ = std::move(idx);
    return ts;
}

std::size_t TaskSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        if (tasks_[i].name == name) return i;
    }
    return tasks_.size();
}

TaskSet TaskSet::with_offsets(std::span<const Rat> offsets) const {
    if (offsets.size() != tasks_.size()) throw Error(ErrorCode::DomainViolation, "offset vector size mismatch");
    TaskSet out = *this;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] < Rat(0)) throw Error(ErrorCode::NegativeOffset, "offset " + offsets[i].str());
        out.tasks_[i].offset = offsets[i];
    }
    return out;
}

TaskSet TaskSet::synchronous() const {
    TaskSet out = *this;
    for (auto& t : out.tasks_) t.offset = Rat(0);
    return out;
}

Rat TaskSet::hyperperiod() const {
    Rat h = tasks_.front().period;
    for (const auto& t : tasks_) h = lcm(h, t.period);
    return h;
}

Rat TaskSet::utilization() const {
    Rat u(0);
    for (const auto& t : tasks_) u += t.utilization();
    return u;
}

PriorityAssignment::PriorityAssignment(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    std::vector<bool> seen(ranks_.size() + 1, false);
    for (int r : ranks_) {
        if (r < 1 || static_cast<std::size_t>(r) > ranks_.size() || seen[r]) {
            throw Error(ErrorCode::InvalidPriority, "priority ranks must be a permutation of 1..N");
        }
        seen[r] = true;
    }
}

std::vector<std::size_t> PriorityAssignment::order() const {
    std::vector<std::size_t> out(ranks_.size());
    for (std::size_t i = 0; i < ranks_.size(); ++i) out[ranks_[i] - 1] = i;
    return out;
}

PriorityAssignment rms_priorities(const TaskSet& ts) {
    // TaskSet is already sorted by (period, input position).
    std::vector<int> ranks(ts.size());
    std::iota(ranks.begin(), ranks.end(), 1);
    return PriorityAssignment(std::move(ranks));
}

PriorityAssignment explicit_priorities(const TaskSet& ts, std::span<const int> ranks_in_input_order) {
    if (ranks_in_input_order.size() != ts.size()) {
        throw Error(ErrorCode::InvalidPriority, "expected " + std::to_string(ts.size()) + " ranks, got " +
                                                    std::to_string(ranks_in_input_order.size()));
    }
    std::vector<int> ranks(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) ranks[i] = ranks_in_input_order[ts.input_index(i)];
    return PriorityAssignment(std::move(ranks));
}

}  // namespace sigmoment
