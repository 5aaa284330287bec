#include "sigmoment/interval_set.hpp"

#include <algorithm>

namespace sigmoment {

namespace {

// True when a and b (sorted by lo) overlap or touch without a gap.
bool joins(const Interval& a, const Interval& b) {
    if (b.lo < a.hi) return true;
    if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
    return false;
}

}  // namespace

IntervalSet& IntervalSet::add(Interval iv) {
    if (iv.empty()) return *this;
    parts_.push_back(iv);
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> merged;
    for (const Interval& p : parts_) {
        if (!merged.empty() && joins(merged.back(), p)) {
            Interval& m = merged.back();
            if (p.hi > m.hi) {
                m.hi = p.hi;
                m.hi_closed = p.hi_closed;
            } else if (p.hi == m.hi) {
                m.hi_closed = m.hi_closed || p.hi_closed;
            }
            if (p.lo == m.lo) m.lo_closed = m.lo_closed || p.lo_closed;
        } else {
            merged.push_back(p);
        }
    }
    parts_ = std::move(merged);
    return *this;
}

bool IntervalSet::contains(const Rat& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(x); });
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (const Interval& p : parts_) {
        if (!out.empty()) out += " U ";
        if (p.is_point()) {
            out += "{" + p.lo.str() + "}";
        } else {
            out += (p.lo_closed ? "[" : "(") + p.lo.str() + ", " + p.hi.str() + (p.hi_closed ? "]" : ")");
        }
    }
    return out;
}

}  // namespace sigmoment
