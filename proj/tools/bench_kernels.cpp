// Compares the OpenMP kernels against their serial reference
// implementations and reports timings plus agreement.

#include "labelcut/exact.hpp"
#include "labelcut/instance.hpp"
#include "labelcut/montecarlo.hpp"
#include "labelcut/rng.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <vector>

namespace {

using namespace labelcut;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Random connected instance with a planted optimum well above one, so the
// exhaustive scan has several full levels to enumerate.
Instance random_dense_instance(int n, int q, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (u == 0 && v == n - 1) continue; // no shortcut edge
            if (rng.below(100) < 70)
                edges.push_back({u, v, static_cast<int>(rng.below(static_cast<std::uint64_t>(q)))});
        }
    return make_instance(n, q, 0, n - 1, false, std::move(edges));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    long long trials = 2'000'000;
    int d = 64;
    int n = 14, q = 24;
    std::uint64_t seed = 7;
    app.add_option("--trials", trials, "Monte Carlo trials");
    app.add_option("--d", d, "permutation length");
    app.add_option("--n", n, "vertices of the exhaustive-scan instance");
    app.add_option("--q", q, "labels of the exhaustive-scan instance");
    app.add_option("--seed", seed, "seed");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %12s %12s %8s %s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "agree");

    {
        std::vector<int> j_mu(8), j_nu(8);
        std::iota(j_mu.begin(), j_mu.end(), 0);
        std::iota(j_nu.begin(), j_nu.end(), d / 2);
        McEstimate serial, parallel;
        const double t_serial = time_ms([&] {
            serial = monte_carlo_chain_sep_serial(j_mu, j_nu, d, trials, seed);
        });
        const double t_parallel = time_ms([&] {
            parallel = monte_carlo_chain_sep(j_mu, j_nu, d, trials, seed);
        });
        // Different stream layouts, so compare statistically: both are
        // estimates of the same probability.
        const bool agree =
            std::abs(serial.estimate - parallel.estimate) <=
            5.0 * (serial.std_error + parallel.std_error) + 1e-12;
        std::printf("%-28s %12.2f %12.2f %8.2fx %s\n", "monte-carlo-chain-sep", t_serial,
                    t_parallel, t_serial / t_parallel, agree ? "yes" : "NO");
    }

    {
        const Instance inst = random_dense_instance(n, q, seed);
        CutResult serial, parallel;
        const double t_serial =
            time_ms([&] { serial = min_label_cut_exhaustive_serial(inst); });
        const double t_parallel = time_ms([&] { parallel = min_label_cut_exhaustive(inst); });
        const bool agree = serial.size == parallel.size && serial.witness == parallel.witness &&
                           serial.exact == parallel.exact;
        std::printf("%-28s %12.2f %12.2f %8.2fx %s (opt %d)\n", "exhaustive-level-scan", t_serial,
                    t_parallel, t_serial / t_parallel, agree ? "yes" : "NO", serial.size);
    }

    return 0;
}
