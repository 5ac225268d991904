#pragma once

#include <vector>

namespace labelcut {

enum class LpStatus { optimal, infeasible, unbounded, pivot_limit };

// One inequality sum_j coeffs[j] x_j >= rhs.
struct LpRow {
    std::vector<double> coeffs;
    double rhs = 1.0;
};

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    double value = 0.0;
    std::vector<double> x;
    long long pivots = 0;
};

// Minimizes cost . x subject to the rows and x >= 0. Two-phase primal
// simplex with Bland's rule on a dense tableau; Bland's rule rules out
// cycling, the pivot cap is a backstop. Feasibility tolerance 1e-9,
// optimality tolerance 1e-7.
LpSolution lp_solve_dense(const std::vector<double>& cost, const std::vector<LpRow>& rows,
                          long long max_pivots = 1'000'000);

} // namespace labelcut
