#include "labelcut/montecarlo.hpp"

#include "labelcut/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace labelcut {

namespace {

constexpr long long kBlock = 8192;

void check_args(const std::vector<int>& j_mu, const std::vector<int>& j_nu, int d,
                long long trials) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    for (int j : j_mu)
        if (j < 0 || j >= d) throw std::invalid_argument("j_mu entry out of [0, d)");
    for (int j : j_nu)
        if (j < 0 || j >= d) throw std::invalid_argument("j_nu entry out of [0, d)");
}

// Runs `count` trials on one RNG stream. Only the permutation restricted to
// j_mu matters, so a partial Fisher-Yates placing |j_mu| images suffices.
long long run_trials(Rng& rng, const std::vector<char>& in_nu, int d, int m, long long count) {
    std::vector<int> slots(static_cast<std::size_t>(d));
    long long hits = 0;
    for (long long t = 0; t < count; ++t) {
        std::iota(slots.begin(), slots.end(), 0);
        bool hit = false;
        for (int i = 0; i < m; ++i) {
            const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - i)));
            std::swap(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]);
            if (in_nu[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])]) {
                hit = true;
                break;
            }
        }
        if (hit) ++hits;
    }
    return hits;
}

McEstimate finish(long long hits, long long trials) {
    McEstimate est;
    est.hits = hits;
    est.trials = trials;
    est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    return est;
}

} // namespace

McEstimate monte_carlo_chain_sep(const std::vector<int>& j_mu, const std::vector<int>& j_nu,
                                 int d, long long trials, std::uint64_t seed) {
    check_args(j_mu, j_nu, d, trials);
    if (j_mu.empty() || j_nu.empty()) return finish(0, trials);

    std::vector<char> in_nu(static_cast<std::size_t>(d), 0);
    for (int j : j_nu) in_nu[static_cast<std::size_t>(j)] = 1;
    const int m = static_cast<int>(j_mu.size());

    const long long blocks = (trials + kBlock - 1) / kBlock;
    long long hits = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
    for (long long b = 0; b < blocks; ++b) {
        const long long count = std::min(kBlock, trials - b * kBlock);
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(b)));
        hits += run_trials(rng, in_nu, d, m, count);
    }
    return finish(hits, trials);
}

McEstimate monte_carlo_chain_sep_serial(const std::vector<int>& j_mu,
                                        const std::vector<int>& j_nu, int d, long long trials,
                                        std::uint64_t seed) {
    check_args(j_mu, j_nu, d, trials);
    if (j_mu.empty() || j_nu.empty()) return finish(0, trials);

    std::vector<char> in_nu(static_cast<std::size_t>(d), 0);
    for (int j : j_nu) in_nu[static_cast<std::size_t>(j)] = 1;

    Rng rng(stream_seed(seed, 0));
    const long long hits = run_trials(rng, in_nu, d, static_cast<int>(j_mu.size()), trials);
    return finish(hits, trials);
}

} // namespace labelcut
