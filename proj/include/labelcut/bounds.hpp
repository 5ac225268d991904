#pragma once

#include <optional>

namespace labelcut {

// Probability that a uniform random permutation of [0, d) maps at least one
// element of a fixed set of size size_mu into a fixed set of size size_nu:
//   1 - C(d - size_nu, size_mu) / C(d, size_mu).
// Exact 128-bit rationals when the binomials fit, log-gamma otherwise
// (relative error well under 1e-12). Zero when either size is zero.
double chain_sep_exact_prob(int size_mu, int size_nu, int d);

// Closed-form upper bound 1 - (1 - 8a/d)^{4a} on the probability above for
// sizes at most 4a. Requires d > 8a.
double chain_sep_prob_bound(double a, int d);

// Number of chain separation events charged across the shutters of light
// element pairs: (1/2) h (3k/4)(3k/4 - 1).
double light_shutter_exponent(double h, double k);

// Log (nats) of the bound on the probability that one subset separates the
// source from the sink inside all light shutters:
//   light_shutter_exponent * ln(1 - (1 - 8a/d)^{4a}).
double good_config_log_prob_bound(double a, double d, double h, double k);

// Log (nats) of the bound (4a+1)^k d^{(4a+1)k} on the number of distinct
// light-label sets: k ln(4a+1) + (4a+1) k ln d.
double log_config_count_bound(double k, double d, double a);

// log z: count bound plus probability bound. z < 1 (log negative) certifies
// that some sample of the random instance admits no separating subset of the
// given size. Entirely in log space; z itself is never materialized.
double eval_log_z(double k, double d, double h, double a);

// sum_{i=1}^{m} C(d,i) <= (m+1)/2 C(d,m+1). Holds whenever 2m < d; callers
// are responsible for that side condition. Exact integer arithmetic,
// d <= 120.
bool binomial_tail_inequality_holds(int d, int m);

// delta / (2 delta + beta + 2) > 1/3 - epsilon, strict. Requires positive
// delta and beta and epsilon in (0, 1/3).
bool check_exponent(double delta, double beta, double epsilon);

struct ZCrossover {
    double k = 0.0;      // first scanned k with log z < 0 (powers of two)
    double log_z = 0.0;  // value there
    int doublings = 0;   // k = 2^doublings
};

// Scans k = 2, 4, 8, ... with the analytic parameter forms a = k^delta,
// d = 32 k^{2 delta}, h = k^beta for delta = 1/(3 epsilon) and
// beta = delta - 1 + epsilon/2, and reports the first sign change of log z.
// Returns nullopt if none occurs within max_doublings.
std::optional<ZCrossover> find_z_crossover(double epsilon, int max_doublings = 400);

} // namespace labelcut
