#include "labelcut/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace labelcut {

namespace {

constexpr double kPivotEps = 1e-9;   // entries below this are treated as zero
constexpr double kCostEps = 1e-9;    // reduced-cost threshold for entering
constexpr double kFeasEps = 1e-9;    // phase-1 objective threshold

// Dense tableau over columns [structural | surplus | artificial | rhs] with
// one artificial variable per row as the initial basis.
struct Tableau {
    int rows = 0;
    int n_struct = 0;            // structural + surplus columns
    int cols = 0;                // total variable columns (without rhs)
    std::vector<double> a;       // (rows) x (cols + 1)
    std::vector<int> basis;      // basic variable per row

    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * (cols + 1) + c]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r) * (cols + 1) + c]; }
    double& rhs(int r) { return at(r, cols); }
    double rhs(int r) const { return at(r, cols); }

    void pivot(int pr, int pc) {
        const double piv = at(pr, pc);
        for (int c = 0; c <= cols; ++c) at(pr, c) /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const double factor = at(r, pc);
            if (factor == 0.0) continue;
            for (int c = 0; c <= cols; ++c) at(r, c) -= factor * at(pr, c);
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }
};

// Reduced cost of column c for objective `obj` (length cols, zeros allowed):
// obj[c] - sum_r obj[basis[r]] * a[r][c].
double reduced_cost(const Tableau& t, const std::vector<double>& obj, int c) {
    double rc = obj[static_cast<std::size_t>(c)];
    for (int r = 0; r < t.rows; ++r) {
        const double ob = obj[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])];
        if (ob != 0.0) rc -= ob * t.at(r, c);
    }
    return rc;
}

// Bland: entering = lowest-index eligible column; leaving = min ratio with
// the lowest basic-variable index among ties. Returns false at optimality.
// Sets *unbounded when the entering column has no positive entry.
bool bland_step(Tableau& t, const std::vector<double>& obj, const std::vector<char>& allowed,
                bool* unbounded) {
    int enter = -1;
    for (int c = 0; c < t.cols; ++c) {
        if (!allowed[static_cast<std::size_t>(c)]) continue;
        if (reduced_cost(t, obj, c) < -kCostEps) {
            enter = c;
            break;
        }
    }
    if (enter < 0) return false;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < t.rows; ++r) {
        const double coef = t.at(r, enter);
        if (coef <= kPivotEps) continue;
        const double ratio = t.rhs(r) / coef;
        if (leave < 0 || ratio < best_ratio - kPivotEps ||
            (std::abs(ratio - best_ratio) <= kPivotEps &&
             t.basis[static_cast<std::size_t>(r)] < t.basis[static_cast<std::size_t>(leave)])) {
            leave = r;
            best_ratio = ratio;
        }
    }
    if (leave < 0) {
        *unbounded = true;
        return false;
    }
    t.pivot(leave, enter);
    return true;
}

} // namespace

LpSolution lp_solve_dense(const std::vector<double>& cost, const std::vector<LpRow>& rows,
                          long long max_pivots) {
    const int n = static_cast<int>(cost.size());
    const int m = static_cast<int>(rows.size());
    for (const LpRow& row : rows)
        if (static_cast<int>(row.coeffs.size()) != n)
            throw std::invalid_argument("constraint width does not match cost vector");

    LpSolution sol;
    if (m == 0) {
        // With x >= 0 only, the optimum sits at the origin for nonnegative
        // costs; a negative cost makes the problem unbounded.
        sol.x.assign(static_cast<std::size_t>(n), 0.0);
        for (double c : cost)
            if (c < 0.0) {
                sol.status = LpStatus::unbounded;
                return sol;
            }
        sol.status = LpStatus::optimal;
        return sol;
    }

    Tableau t;
    t.rows = m;
    t.n_struct = n + m;       // structural + one surplus per row
    t.cols = t.n_struct + m;  // + one artificial per row
    t.a.assign(static_cast<std::size_t>(m) * (t.cols + 1), 0.0);
    t.basis.resize(static_cast<std::size_t>(m));

    for (int r = 0; r < m; ++r) {
        const double sign = rows[static_cast<std::size_t>(r)].rhs < 0.0 ? -1.0 : 1.0;
        for (int c = 0; c < n; ++c)
            t.at(r, c) = sign * rows[static_cast<std::size_t>(r)].coeffs[static_cast<std::size_t>(c)];
        t.at(r, n + r) = sign * -1.0; // surplus of the >= row
        t.at(r, t.n_struct + r) = 1.0;
        t.rhs(r) = sign * rows[static_cast<std::size_t>(r)].rhs;
        t.basis[static_cast<std::size_t>(r)] = t.n_struct + r;
    }

    std::vector<char> allowed(static_cast<std::size_t>(t.cols), 1);
    std::vector<double> phase1(static_cast<std::size_t>(t.cols), 0.0);
    for (int r = 0; r < m; ++r) phase1[static_cast<std::size_t>(t.n_struct + r)] = 1.0;

    bool unbounded = false;
    while (bland_step(t, phase1, allowed, &unbounded)) {
        if (++sol.pivots > max_pivots) {
            sol.status = LpStatus::pivot_limit;
            return sol;
        }
    }
    if (unbounded) throw std::logic_error("phase 1 cannot be unbounded");

    double infeas = 0.0;
    for (int r = 0; r < m; ++r)
        if (t.basis[static_cast<std::size_t>(r)] >= t.n_struct) infeas += t.rhs(r);
    if (infeas > kFeasEps) {
        sol.status = LpStatus::infeasible;
        return sol;
    }

    // Drive leftover zero-level artificials out of the basis where possible;
    // rows with no eligible pivot are redundant and harmless.
    for (int r = 0; r < m; ++r) {
        if (t.basis[static_cast<std::size_t>(r)] < t.n_struct) continue;
        for (int c = 0; c < t.n_struct; ++c)
            if (std::abs(t.at(r, c)) > kPivotEps) {
                t.pivot(r, c);
                break;
            }
    }
    for (int c = t.n_struct; c < t.cols; ++c) allowed[static_cast<std::size_t>(c)] = 0;

    std::vector<double> phase2(static_cast<std::size_t>(t.cols), 0.0);
    for (int c = 0; c < n; ++c) phase2[static_cast<std::size_t>(c)] = cost[static_cast<std::size_t>(c)];

    unbounded = false;
    while (bland_step(t, phase2, allowed, &unbounded)) {
        if (++sol.pivots > max_pivots) {
            sol.status = LpStatus::pivot_limit;
            return sol;
        }
    }
    if (unbounded) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    sol.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[static_cast<std::size_t>(r)];
        if (b < n) sol.x[static_cast<std::size_t>(b)] = t.rhs(r);
    }
    double value = 0.0;
    for (int c = 0; c < n; ++c) value += cost[static_cast<std::size_t>(c)] * sol.x[static_cast<std::size_t>(c)];
    sol.value = value;
    sol.status = LpStatus::optimal;
    return sol;
}

} // namespace labelcut
