#pragma once

#include <string>
#include <vector>

#include "sigmoment/rat.hpp"

namespace sigmoment {

/// One component of an IntervalSet. An isolated point p is stored as the
/// closed degenerate interval [p, p].
struct Interval {
    Rat lo;
    bool lo_closed = true;
    Rat hi;
    bool hi_closed = true;

    static Interval point(const Rat& p) { return {p, true, p, true}; }
    bool is_point() const { return lo == hi; }
    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    bool contains(const Rat& x) const {
        return (lo < x || (lo_closed && lo == x)) && (x < hi || (hi_closed && hi == x));
    }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of intervals; components are kept sorted and pairwise
/// disjoint, and touching components are merged.
class IntervalSet {
public:
    IntervalSet() = default;

    IntervalSet& add(Interval iv);
    IntervalSet& add_point(const Rat& p) { return add(Interval::point(p)); }

    bool contains(const Rat& x) const;
    bool empty() const { return parts_.empty(); }
    const std::vector<Interval>& parts() const { return parts_; }

    /// e.g. "(0, 1] U {5}".
    std::string str() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

}  // namespace sigmoment
