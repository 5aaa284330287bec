#pragma once

#include <cstddef>
#include <vector>

#include "sigmoment/rat.hpp"
#include "sigmoment/task_set.hpp"

namespace sigmoment {

/// Sum of C_i / T_i, exact.
Rat utilization(const TaskSet& ts);

/// N * (2^(1/N) - 1).
double ll_bound(std::size_t n);

/// Two-task utilization ceiling as a function of C1 once C2 is stretched to
/// the largest value the rate-monotonic test admits:
///   C1 <= T1*frac(T2/T1):  1 + C1 * (1/T1 - ceil(T2/T1)/T2)
///   otherwise:             (T1/T2) * floor(T2/T1) + C1 * (1/T1 - floor(T2/T1)/T2)
/// Requires 0 <= C1 < T1 <= T2. The value is rational, so it stays exact.
Rat ubar_two(const Rat& c1, const Rat& t1, const Rat& t2);

/// Value of ubar_two at the junction C1 = T1*frac(T2/T1):
///   1 - (T1/T2) * (ceil(T2/T1) - T2/T1) * (T2/T1 - floor(T2/T1)).
Rat ubar_junction(const Rat& t1, const Rat& t2);

/// Junction value in terms of I = floor(T2/T1), f = frac(T2/T1):
/// 1 - f(1 - f) / (I + f).
double ubar_if(double i, double f);

/// d/df of ubar_if: (f^2 + 2 I f - I) / (I + f)^2.
double ubar_if_df(double i, double f);

struct UbarMinimum {
    int i = 1;
    double f_star = 0;
    double u_star = 0;
};

/// Minimizes ubar_if over integer I in [1, max_i] and f in [0, 1) by
/// bisecting on the sign of the f-derivative for each I.
UbarMinimum minimize_ubar(int max_i = 16);

/// |U - bound| below this is treated as inconclusive for the LL comparison.
inline constexpr double kBoundTolerance = 1e-9;

enum class LlOutcome { Pass, Fail, Inconclusive };

/// Compares the exact utilization against the irrational LL bound.
LlOutcome ll_compare(const Rat& u, std::size_t n);

struct UtilizationReport {
    std::vector<Rat> per_task;
    Rat total;
    double ll_bound = 0;
    LlOutcome ll = LlOutcome::Fail;
    bool passes_ll = false;     // ll == Pass, or Inconclusive resolved by the exact test
    bool passes_exact = false;  // rate-monotonic worst-case test
};

UtilizationReport utilization_report(const TaskSet& ts);

}  // namespace sigmoment
