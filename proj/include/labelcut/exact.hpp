#pragma once

#include "labelcut/instance.hpp"

#include <optional>
#include <string>

namespace labelcut {

struct CutResult {
    bool exact = true;        // false: search only proved OPT > size
    int size = 0;             // cut size, or the exhausted cap when !exact
    std::vector<int> witness; // ascending; lexicographically smallest optimum when exact
    std::string method;
    long long nodes = 0;      // subsets tested / branch nodes visited
};

// Subsets of the labels that appear on edges, by increasing cardinality and
// lexicographic within a level; the first cut found is the answer. With a
// cap and no cut of size <= cap, reports exact = false. Throws ResourceError
// when a level would exceed level_guard subsets. OpenMP-parallel over rank
// ranges of each level; result identical to the serial reference.
CutResult min_label_cut_exhaustive(const Instance& inst, std::optional<int> cap = std::nullopt,
                                   long long level_guard = 10'000'000);
CutResult min_label_cut_exhaustive_serial(const Instance& inst,
                                          std::optional<int> cap = std::nullopt,
                                          long long level_guard = 10'000'000);

// Hitting-set branch and bound: repeatedly pick an s-t path avoiding the
// chosen labels and branch on which of its labels joins the cut, pruning
// with a label-disjoint-paths lower bound and the incumbent. Seeded with
// the min-cut upper bound. Returns the lexicographically smallest optimum.
CutResult min_label_cut_bnb(const Instance& inst, long long node_guard = 50'000'000);

// Labels of a minimum s-t edge cut (augmenting-path max flow). Always a
// feasible label cut, not necessarily optimal.
CutResult label_cut_upper_bound_via_min_cut(const Instance& inst);

} // namespace labelcut
