#include "labelcut/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace labelcut {

namespace {

using u128 = unsigned __int128;

// C(n, k) in 128 bits, or nullopt on overflow.
std::optional<u128> binom_u128(int n, int k) {
    if (k < 0 || k > n) return u128{0};
    k = std::min(k, n - k);
    u128 result = 1;
    for (int i = 1; i <= k; ++i) {
        const u128 factor = static_cast<u128>(n - k + i);
        if (result > (~u128{0}) / factor) return std::nullopt;
        result = result * factor / static_cast<u128>(i);
    }
    return result;
}

double log_binom(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace

double chain_sep_exact_prob(int size_mu, int size_nu, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (size_mu < 0 || size_mu > d) throw std::invalid_argument("size_mu out of [0, d]");
    if (size_nu < 0 || size_nu > d) throw std::invalid_argument("size_nu out of [0, d]");
    if (size_mu == 0 || size_nu == 0) return 0.0;
    if (d - size_nu < size_mu) return 1.0; // cannot avoid the target set

    const auto num = binom_u128(d - size_nu, size_mu);
    const auto den = binom_u128(d, size_mu);
    if (num && den) {
        const long double avoid =
            static_cast<long double>(*num) / static_cast<long double>(*den);
        return static_cast<double>(1.0L - avoid);
    }
    const double log_avoid = log_binom(d - size_nu, size_mu) - log_binom(d, size_mu);
    return 1.0 - std::exp(log_avoid);
}

double chain_sep_prob_bound(double a, int d) {
    if (a < 0.0) throw std::invalid_argument("a must be nonnegative");
    if (!(d > 8.0 * a)) throw std::domain_error("bound requires d > 8a");
    if (a == 0.0) return 0.0;
    // 1 - (1 - 8a/d)^{4a}, via expm1/log1p to survive tiny 8a/d.
    return -std::expm1(4.0 * a * std::log1p(-8.0 * a / d));
}

double light_shutter_exponent(double h, double k) {
    return 0.5 * h * (3.0 * k / 4.0) * (3.0 * k / 4.0 - 1.0);
}

double good_config_log_prob_bound(double a, double d, double h, double k) {
    if (!(d > 8.0 * a)) throw std::domain_error("bound requires d > 8a");
    if (h < 1.0) throw std::invalid_argument("h must be at least 1");
    if (k < 2.0) throw std::invalid_argument("k must be at least 2");
    if (a == 0.0) return -std::numeric_limits<double>::infinity(); // separation impossible
    const double log_single = std::log(-std::expm1(4.0 * a * std::log1p(-8.0 * a / d)));
    return light_shutter_exponent(h, k) * log_single;
}

double log_config_count_bound(double k, double d, double a) {
    if (k < 1.0 || d < 1.0 || a < 0.0) throw std::invalid_argument("bad count bound parameters");
    return k * std::log(4.0 * a + 1.0) + (4.0 * a + 1.0) * k * std::log(d);
}

double eval_log_z(double k, double d, double h, double a) {
    return log_config_count_bound(k, d, a) + good_config_log_prob_bound(a, d, h, k);
}

bool binomial_tail_inequality_holds(int d, int m) {
    if (d < 1 || d > 120) throw std::invalid_argument("d out of exact range [1, 120]");
    if (m < 0 || m >= d) throw std::invalid_argument("need 0 <= m < d");
    u128 lhs = 0;
    for (int i = 1; i <= m; ++i) lhs += *binom_u128(d, i); // fits: sums < 2^121
    const u128 rhs2 = static_cast<u128>(m + 1) * *binom_u128(d, m + 1);
    return 2 * lhs <= rhs2;
}

bool check_exponent(double delta, double beta, double epsilon) {
    if (!(delta > 0.0) || !(beta > 0.0)) throw std::invalid_argument("delta and beta must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0))
        throw std::invalid_argument("epsilon must lie in (0, 1/3)");
    return delta / (2.0 * delta + beta + 2.0) > 1.0 / 3.0 - epsilon;
}

std::optional<ZCrossover> find_z_crossover(double epsilon, int max_doublings) {
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0))
        throw std::invalid_argument("epsilon must lie in (0, 1/3)");
    const double delta = 1.0 / (3.0 * epsilon);
    const double beta = delta - 1.0 + epsilon / 2.0;
    for (int i = 1; i <= max_doublings; ++i) {
        const double k = std::ldexp(1.0, i);
        const double a = std::pow(k, delta);
        const double d = 32.0 * std::pow(k, 2.0 * delta);
        const double h = std::pow(k, beta);
        if (!std::isfinite(a) || !std::isfinite(d) || !std::isfinite(h)) return std::nullopt;
        const double lz = eval_log_z(k, d, h, a);
        if (lz < 0.0) return ZCrossover{k, lz, i};
    }
    return std::nullopt;
}

} // namespace labelcut
