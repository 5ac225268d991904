#pragma once

#include "labelcut/generators.hpp"
#include "labelcut/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace labelcut {

// lp1 charges a label once per edge of a path; lp2 once per distinct label.
enum class LpVariant { lp1, lp2 };
enum class Lp2Oracle { generic, gadget };

// Path constraint sum_l coeffs[l] x_{labels[l]} >= 1 generated from `path`.
struct PathConstraint {
    StPath path;
    std::vector<int> labels; // ascending
    std::vector<int> coeffs; // lp1: edge multiplicity; lp2: all ones
    double weight = 0.0;     // constraint value at the separated point
};

struct PathSearchResult {
    bool connected = true; // false: no s-t path at all
    double weight = 0.0;
    StPath path;
};

// Minimum of sum_{e in P} x[label(e)] over s-t paths (shortest path under
// nonnegative edge weights). Among minimum-weight paths returns the
// lexicographically smallest vertex sequence.
PathSearchResult min_weight_path_edge_sum(const Instance& inst, const std::vector<double>& x);

// Exact minimum of sum_{l in L(P)} x[l] over simple s-t paths; a label is
// charged once no matter how often it reappears. Depth-first branch and
// bound with the paid weight as lower bound; exponential in the worst case,
// so guarded.
PathSearchResult min_distinct_label_path(const Instance& inst, const std::vector<double>& x,
                                         long long node_guard = 10'000'000);

// Same minimum on a generated instance, in closed form: a path picks top or
// bottom per diamond independently and all its labels are distinct, so the
// best chain value is sum_j min(x_top_j, x_bottom_j).
PathSearchResult min_distinct_label_path_gadget(const GadgetInstance& gi,
                                                const std::vector<double>& x);

// Most violated constraint, or nullopt when every path weighs at least
// 1 - tol. Throws std::runtime_error when source and sink are already
// disconnected.
std::optional<PathConstraint> separate_lp1(const Instance& inst, const std::vector<double>& x,
                                           double tol);
std::optional<PathConstraint> separate_lp2_generic(const Instance& inst,
                                                   const std::vector<double>& x, double tol,
                                                   long long node_guard = 10'000'000);
std::optional<PathConstraint> separate_lp2_gadget(const GadgetInstance& gi,
                                                  const std::vector<double>& x, double tol);

enum class RelaxStatus { optimal, disconnected };

struct RelaxationResult {
    RelaxStatus status = RelaxStatus::optimal;
    double value = 0.0;
    std::vector<double> x;
    std::vector<PathConstraint> cuts;
    std::vector<int> active; // cut indices tight at the optimum
    int iterations = 0;
};

// Cutting-plane loop: start from x = 0 with no constraints, alternate the
// dense LP and the separation oracle until no violated path remains.
// Throws ResourceError past max_cuts.
RelaxationResult solve_relaxation(const Instance& inst, LpVariant variant, double tol = 1e-7,
                                  int max_cuts = 100'000);
RelaxationResult solve_relaxation(const GadgetInstance& gi, LpVariant variant, Lp2Oracle oracle,
                                  double tol = 1e-7, int max_cuts = 100'000);

// Objective plus generated cuts in LP text format, for external cross-checks.
std::string emit_lp_text(const std::vector<PathConstraint>& cuts, int label_count);

} // namespace labelcut
