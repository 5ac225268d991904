#pragma once

#include <cstdint>
#include <vector>

namespace labelcut {

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0; // binomial: sqrt(p(1-p)/trials)
    long long hits = 0;     // trials where the permutation image met j_nu
    long long trials = 0;
};

// Empirical probability that a uniform random permutation of [0, d) maps
// some element of j_mu into j_nu. Trials are processed in fixed blocks with
// one RNG substream per block, so the result depends only on the arguments
// and never on the thread count. OpenMP-parallel over blocks.
McEstimate monte_carlo_chain_sep(const std::vector<int>& j_mu, const std::vector<int>& j_nu,
                                 int d, long long trials, std::uint64_t seed);

// Single-stream reference implementation of the same estimator.
McEstimate monte_carlo_chain_sep_serial(const std::vector<int>& j_mu,
                                        const std::vector<int>& j_nu, int d, long long trials,
                                        std::uint64_t seed);

} // namespace labelcut
