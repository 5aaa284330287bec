#include "sigmoment/bounds.hpp"

#include <cmath>

#include "sigmoment/error.hpp"
#include "sigmoment/worstcase.hpp"

namespace sigmoment {

Rat utilization(const TaskSet& ts) { return ts.utilization(); }

double ll_bound(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::DomainViolation, "ll_bound needs N >= 1");
    const double nn = static_cast<double>(n);
    // expm1 keeps full precision as 2^(1/N) - 1 shrinks toward zero.
    return nn * std::expm1(std::log(2.0) / nn);
}

Rat ubar_two(const Rat& c1, const Rat& t1, const Rat& t2) {
    if (!(Rat(0) <= c1 && c1 < t1 && t1 <= t2)) throw Error(ErrorCode::DomainViolation, "ubar_two needs 0 <= C1 < T1 <= T2");
    const Rat ratio = t2 / t1;
    const Rat junction = t1 * ratio.frac();
    if (c1 <= junction) return Rat(1) + c1 * (Rat(1) / t1 - Rat(ratio.ceil()) / t2);
    const Rat fl(ratio.floor());
    return (t1 / t2) * fl + c1 * (Rat(1) / t1 - fl / t2);
}

Rat ubar_junction(const Rat& t1, const Rat& t2) {
    if (!(Rat(0) < t1 && t1 <= t2)) throw Error(ErrorCode::DomainViolation, "ubar_junction needs 0 < T1 <= T2");
    const Rat ratio = t2 / t1;
    return Rat(1) - (t1 / t2) * (Rat(ratio.ceil()) - ratio) * (ratio - Rat(ratio.floor()));
}

double ubar_if(double i, double f) { return 1.0 - f * (1.0 - f) / (i + f); }

double ubar_if_df(double i, double f) { return (f * f + 2.0 * i * f - i) / ((i + f) * (i + f)); }

UbarMinimum minimize_ubar(int max_i) {
    if (max_i < 1) throw Error(ErrorCode::DomainViolation, "minimize_ubar needs max_i >= 1");
    UbarMinimum best;
    best.u_star = 2.0;
    for (int i = 1; i <= max_i; ++i) {
        const double di = i;
        double lo = 0.0;
        double hi = 1.0;  // derivative < 0 at 0, > 0 at 1
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (ubar_if_df(di, mid) < 0.0) lo = mid; else hi = mid;
        }
        const double f = 0.5 * (lo + hi);
        const double u = ubar_if(di, f);
        if (u < best.u_star) best = {i, f, u};
    }
    return best;
}

LlOutcome ll_compare(const Rat& u, std::size_t n) {
    const double bound = ll_bound(n);
    const long double diff = u.to_long_double() - static_cast<long double>(bound);
    if (std::fabs(static_cast<double>(diff)) < kBoundTolerance) return LlOutcome::Inconclusive;
    return diff < 0 ? LlOutcome::Pass : LlOutcome::Fail;
}

UtilizationReport utilization_report(const TaskSet& ts) {
    UtilizationReport rep;
    for (const auto& t : ts) rep.per_task.push_back(t.utilization());
    rep.total = ts.utilization();
    rep.ll_bound = ll_bound(ts.size());
    rep.ll = ll_compare(rep.total, ts.size());
    rep.passes_exact = n_task_wc_test(ts).all_schedulable();
    rep.passes_ll = rep.ll == LlOutcome::Pass || (rep.ll == LlOutcome::Inconclusive && rep.passes_exact);
    return rep;
}

}  // namespace sigmoment
