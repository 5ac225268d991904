// The OpenMP kernels must produce results identical to (or statistically
// consistent with) their serial references, for any thread count.

#include "labelcut/exact.hpp"
#include "labelcut/gap_report.hpp"
#include "labelcut/montecarlo.hpp"
#include "labelcut/rng.hpp"
#include "labelcut/verify.hpp"

#include <doctest.h>
#include <omp.h>

#include "support.hpp"

#include <cmath>

using namespace labelcut;
namespace ts = labelcut::testsupport;

namespace {

struct ThreadGuard {
    int saved = omp_get_max_threads();
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

} // namespace

TEST_CASE("blocked monte carlo is invariant under the thread count") {
    ThreadGuard guard;
    for (int threads : {1, 2, 4, 8}) {
        omp_set_num_threads(threads);
        const McEstimate est = monte_carlo_chain_sep({0, 1}, {1, 2}, 6, 30'000, 99);
        omp_set_num_threads(1);
        const McEstimate ref = monte_carlo_chain_sep({0, 1}, {1, 2}, 6, 30'000, 99);
        CHECK(est.hits == ref.hits);
        CHECK(est.estimate == ref.estimate);
    }
}

TEST_CASE("serial single-stream estimator agrees statistically") {
    const McEstimate serial = monte_carlo_chain_sep_serial({0, 1}, {1, 2}, 6, 100'000, 5);
    const McEstimate parallel = monte_carlo_chain_sep({0, 1}, {1, 2}, 6, 100'000, 5);
    const double exact = 1.0 - (6.0 / 15.0); // C(4,2)/C(6,2)
    CHECK(std::abs(serial.estimate - exact) <= 4 * serial.std_error);
    CHECK(std::abs(parallel.estimate - exact) <= 4 * parallel.std_error);
}

TEST_CASE("parallel exhaustive scan equals the serial reference at any width") {
    ThreadGuard guard;
    Rng rng(3);
    for (int threads : {2, 4}) {
        omp_set_num_threads(threads);
        for (int trial = 0; trial < 10; ++trial) {
            const Instance inst = ts::random_instance(rng, 11, 6, 55);
            const CutResult par = min_label_cut_exhaustive(inst);
            const CutResult ser = min_label_cut_exhaustive_serial(inst);
            CHECK(par.size == ser.size);
            CHECK(par.witness == ser.witness);
            CHECK(par.exact == ser.exact);
        }
    }
}

TEST_CASE("gap grid output does not depend on the job count") {
    GapGridSpec spec;
    spec.ks = {2, 3};
    spec.ds = {1, 2};
    spec.hs = {1};
    spec.seeds = {1, 2};
    spec.jobs = 1;
    const std::string one = gap_rows_to_csv(run_gap_grid(spec));
    spec.jobs = 4;
    const std::string four = gap_rows_to_csv(run_gap_grid(spec));
    CHECK(one == four);
}

TEST_CASE("capped rows keep the flag column honest") {
    GapRow row;
    row.instance_id = "gadget-k9-d9-h9-s1";
    row.k = 9;
    row.d = 9;
    row.h = 9;
    row.seed = 1;
    row.n = 5;
    row.m = 4;
    row.q = 3;
    row.opt = 2; // exhausted cap, not an optimum
    row.opt_exact = false;
    row.lp1 = 0.5;
    row.lp2 = 1.0;
    const std::string csv = to_csv_row(row);
    CHECK(csv == "gadget-k9-d9-h9-s1,9,9,9,1,5,4,3,2,0,0.500000,1.000000,0.000000,0.000000,"
                 "0.000000,0.000000,0.000000\n");
    CHECK(to_record(row).find("opt_exact=0") != std::string::npos);
}

TEST_CASE("verification suite passes at reduced size") {
    VerifyOptions options;
    options.trials = 20'000;
    options.repetitions = 25;
    options.seed = 4;
    const auto reports = run_verification(options);
    CHECK(reports.size() == 7);
    for (const CheckReport& r : reports) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
