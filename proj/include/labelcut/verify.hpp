#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace labelcut {

// Outcome of one numeric check, serializable as a structured text record.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<double> analytic_log; // log-space value in nats, when meaningful
    std::optional<double> empirical;
    std::optional<double> std_error;
};

struct VerifyOptions {
    long long trials = 100'000; // per Monte Carlo repetition
    int repetitions = 100;
    std::uint64_t seed = 1;
    double epsilon = 0.32; // drives the z crossover scan
};

// The full check suite: separation-bound dominance over the parameter grid,
// Monte Carlo consistency, exact configuration counting against the count
// bound, the binomial tail inequality, feasibility of the uniform labeling
// x = 1/d under both distinct-label oracles, the z crossover scan, and the
// exponent inequality.
std::vector<CheckReport> run_verification(const VerifyOptions& options);

// One line, space-separated key=value fields.
std::string to_record(const CheckReport& report);

} // namespace labelcut
