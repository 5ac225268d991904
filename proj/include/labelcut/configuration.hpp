#pragma once

#include <vector>

namespace labelcut {

// Per-element decomposition of a label subset. Label mu*d + j contributes
// index j to per_element[mu]. With c = |subset| and a = c/k, an element is
// light when |J_mu| <= 4a; the comparison is done exactly as k|J_mu| <= 4c.
// The light labels (those of light elements) determine whether two subsets
// act identically inside the shutters of light element pairs.
struct Configuration {
    int k = 0;
    int d = 0;
    long long c = 0;
    std::vector<std::vector<int>> per_element; // J_mu, ascending
    std::vector<int> light_elements;           // ascending; includes |J_mu| = 0 elements
    std::vector<int> light_labels;             // ascending label ids

    double average() const { return k > 0 ? static_cast<double>(c) / k : 0.0; }
};

// Decode `labels` as pairs (mu, j) with mu in [0, k), j in [0, d).
// Throws std::invalid_argument on ids outside [0, k*d) or duplicates.
Configuration config_of(const std::vector<int>& labels, int k, int d);

// Exact number of distinct light-label sets over every subset of size c of
// the k*d labels. Guarded: throws ResourceError when C(kd, c) exceeds
// max_subsets.
long long enumerate_configurations_exact(int k, int d, int c,
                                         long long max_subsets = 10'000'000);

} // namespace labelcut
