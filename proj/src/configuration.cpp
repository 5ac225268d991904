#include "labelcut/configuration.hpp"

#include "labelcut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace labelcut {

Configuration config_of(const std::vector<int>& labels, int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
    Configuration cfg;
    cfg.k = k;
    cfg.d = d;
    cfg.per_element.assign(static_cast<std::size_t>(k), {});

    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate label in subset");
    for (int l : sorted) {
        if (l < 0 || l >= k * d)
            throw std::invalid_argument("label id " + std::to_string(l) + " does not decode");
        cfg.per_element[static_cast<std::size_t>(l / d)].push_back(l % d);
    }
    cfg.c = static_cast<long long>(sorted.size());

    // |J_mu| <= 4a with a = c/k, kept exact: k |J_mu| <= 4c.
    for (int mu = 0; mu < k; ++mu) {
        const long long size = static_cast<long long>(cfg.per_element[static_cast<std::size_t>(mu)].size());
        if (size * k <= 4 * cfg.c) {
            cfg.light_elements.push_back(mu);
            for (int j : cfg.per_element[static_cast<std::size_t>(mu)])
                cfg.light_labels.push_back(mu * d + j);
        }
    }
    return cfg;
}

long long enumerate_configurations_exact(int k, int d, int c, long long max_subsets) {
    if (k < 1 || d < 1 || c < 0) throw std::invalid_argument("bad enumeration parameters");
    const int q = k * d;
    if (c > q) throw std::invalid_argument("subset size exceeds label count");

    // C(q, c) with early bail-out above the guard.
    long long total = 1;
    for (int i = 1; i <= c; ++i) {
        total = total * (q - c + i) / i;
        if (total > max_subsets)
            throw ResourceError("subset enumeration guard exceeded: C(" + std::to_string(q) +
                                "," + std::to_string(c) + ") > " + std::to_string(max_subsets));
    }

    std::set<std::vector<int>> distinct;
    std::vector<int> pick(static_cast<std::size_t>(c));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        distinct.insert(config_of(pick, k, d).light_labels);
        // next lexicographic combination of [0, q)
        int i = c - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == q - c + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return static_cast<long long>(distinct.size());
}

} // namespace labelcut
