#pragma once

// Helpers shared by the test binaries: random instances and brute-force
// oracles that stay independent of the implementation paths they check.

#include "labelcut/instance.hpp"
#include "labelcut/rng.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <vector>

namespace labelcut::testsupport {

// Random simple undirected instance with s = 0, t = n-1. Not necessarily
// s-t connected.
inline Instance random_instance(Rng& rng, int max_n = 12, int max_q = 6, int edge_pct = 40) {
    const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    const int q = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_q)));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < edge_pct)
                edges.push_back({u, v, static_cast<int>(rng.below(static_cast<std::uint64_t>(q)))});
    return make_instance(n, q, 0, n - 1, false, std::move(edges));
}

inline std::vector<int> random_labels(Rng& rng, int q, int count) {
    std::set<int> set;
    while (static_cast<int>(set.size()) < count)
        set.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(q))));
    return {set.begin(), set.end()};
}

// Every simple s-t path, by exhaustive DFS. Only for tiny instances.
inline std::vector<StPath> all_simple_paths(const Instance& inst) {
    std::vector<StPath> out;
    std::vector<char> visited(static_cast<std::size_t>(inst.vertex_count), 0);
    StPath current;
    std::function<void(int)> dfs = [&](int u) {
        visited[static_cast<std::size_t>(u)] = 1;
        current.push_back(u);
        if (u == inst.sink) {
            out.push_back(current);
        } else {
            for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(u)])
                if (!visited[static_cast<std::size_t>(a.to)]) dfs(a.to);
        }
        current.pop_back();
        visited[static_cast<std::size_t>(u)] = 0;
    };
    dfs(inst.source);
    return out;
}

// Independent cut predicate: a subset cuts iff it hits the label set of
// every simple s-t path.
inline bool is_cut_by_path_enumeration(const Instance& inst, const std::vector<int>& labels) {
    const std::set<int> chosen(labels.begin(), labels.end());
    for (const StPath& path : all_simple_paths(inst)) {
        bool hit = false;
        for (int l : path_labels(inst, path))
            if (chosen.count(l)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// Independent minimum of the distinct-label weight over simple s-t paths.
inline double min_distinct_label_weight_by_enumeration(const Instance& inst,
                                                       const std::vector<double>& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const StPath& path : all_simple_paths(inst)) {
        double w = 0.0;
        for (int l : path_labels(inst, path)) w += x[static_cast<std::size_t>(l)];
        best = std::min(best, w);
    }
    return best;
}

// Independent minimum of the per-edge weight sum over simple s-t paths.
inline double min_edge_sum_weight_by_enumeration(const Instance& inst,
                                                 const std::vector<double>& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const StPath& path : all_simple_paths(inst)) {
        double w = 0.0;
        for (std::size_t i = 1; i < path.size(); ++i) {
            for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(path[i - 1])])
                if (a.to == path[i]) {
                    w += x[static_cast<std::size_t>(inst.edges[static_cast<std::size_t>(a.edge)].label)];
                    break;
                }
        }
        best = std::min(best, w);
    }
    return best;
}

} // namespace labelcut::testsupport
