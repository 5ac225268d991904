#include "labelcut/exact.hpp"

#include "labelcut/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace labelcut {

namespace {

// C(n, k) capped at `cap` to avoid overflow.
long long binom_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// Lexicographic rank -> combination of size c over [0, n).
std::vector<int> unrank_combination(long long rank, int n, int c, long long guard) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(c));
    int next = 0;
    for (int i = 0; i < c; ++i) {
        for (;;) {
            const long long block = binom_capped(n - next - 1, c - i - 1, guard);
            if (rank < block) break;
            rank -= block;
            ++next;
        }
        out.push_back(next++);
    }
    return out;
}

bool next_combination(std::vector<int>& pick, int n) {
    const int c = static_cast<int>(pick.size());
    int i = c - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - c + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

// Tests ranks [begin, end) of the size-c combinations over `labels`.
// Returns the first rank that is a cut, or -1.
long long scan_range(const Instance& inst, const std::vector<int>& labels, int c, long long begin,
                     long long end, long long guard, std::vector<char>& mask) {
    const int p = static_cast<int>(labels.size());
    std::vector<int> pick = unrank_combination(begin, p, c, guard);
    for (long long r = begin; r < end; ++r) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int i : pick) mask[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] = 1;
        if (!st_connected_without(inst, mask)) return r;
        if (r + 1 < end && !next_combination(pick, p)) break;
    }
    return -1;
}

CutResult exhaustive_impl(const Instance& inst, std::optional<int> cap, long long guard,
                          bool parallel) {
    const std::vector<int> labels = present_labels(inst);
    const int p = static_cast<int>(labels.size());
    const int max_level = cap ? std::min(*cap, p) : p;

    CutResult res;
    res.method = parallel ? "exhaustive" : "exhaustive-serial";

    for (int c = 0; c <= max_level; ++c) {
        const long long total = binom_capped(p, c, guard);
        if (total > guard)
            throw ResourceError("subset enumeration guard exceeded at level " + std::to_string(c) +
                                " (" + std::to_string(guard) + " subsets)");
        long long found = -1;
        if (!parallel || total < 4096) {
            std::vector<char> mask(static_cast<std::size_t>(inst.label_count), 0);
            found = scan_range(inst, labels, c, 0, total, guard, mask);
            res.nodes += (found < 0 ? total : found + 1);
        } else {
            const long long chunk = 4096;
            const long long chunks = (total + chunk - 1) / chunk;
            std::atomic<long long> best{-1};
            std::atomic<long long> tested{0};
#pragma omp parallel
            {
                std::vector<char> mask(static_cast<std::size_t>(inst.label_count), 0);
#pragma omp for schedule(dynamic)
                for (long long b = 0; b < chunks; ++b) {
                    const long long begin = b * chunk;
                    const long long cur = best.load(std::memory_order_relaxed);
                    if (cur >= 0 && begin > cur) continue; // chunk cannot improve
                    const long long end = std::min(total, begin + chunk);
                    const long long hit = scan_range(inst, labels, c, begin, end, guard, mask);
                    tested.fetch_add((hit < 0 ? end - begin : hit - begin + 1),
                                     std::memory_order_relaxed);
                    if (hit >= 0) {
                        long long prev = best.load(std::memory_order_relaxed);
                        while ((prev < 0 || hit < prev) &&
                               !best.compare_exchange_weak(prev, hit, std::memory_order_relaxed)) {
                        }
                    }
                }
            }
            found = best.load();
            res.nodes += tested.load();
        }
        if (found >= 0) {
            res.size = c;
            const std::vector<int> pick = unrank_combination(found, p, c, guard);
            for (int i : pick) res.witness.push_back(labels[static_cast<std::size_t>(i)]);
            return res;
        }
    }

    // No cut within the cap. Without a cap this needs every s-t path to
    // survive the removal of all labels, i.e. an unlabeled-edge path, which
    // simplicity rules out; so this branch means cap exhausted.
    res.exact = false;
    res.size = max_level;
    return res;
}

// Shortest s-t path avoiding masked labels, or empty when none exists.
StPath bfs_path_avoiding(const Instance& inst, const std::vector<char>& mask) {
    std::vector<int> parent(static_cast<std::size_t>(inst.vertex_count), -1);
    std::queue<int> queue;
    parent[static_cast<std::size_t>(inst.source)] = inst.source;
    queue.push(inst.source);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (u == inst.sink) break;
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(u)]) {
            if (parent[static_cast<std::size_t>(a.to)] >= 0) continue;
            if (mask[static_cast<std::size_t>(inst.edges[static_cast<std::size_t>(a.edge)].label)])
                continue;
            parent[static_cast<std::size_t>(a.to)] = u;
            queue.push(a.to);
        }
    }
    if (parent[static_cast<std::size_t>(inst.sink)] < 0) return {};
    StPath path;
    for (int v = inst.sink; v != inst.source; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    path.push_back(inst.source);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> distinct_path_labels(const Instance& inst, const StPath& path) {
    std::vector<int> labels;
    for (std::size_t i = 1; i < path.size(); ++i)
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(path[i - 1])])
            if (a.to == path[i]) {
                labels.push_back(inst.edges[static_cast<std::size_t>(a.edge)].label);
                break;
            }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

// Number of label-disjoint s-t paths avoiding `mask`, found greedily. Each
// needs at least one extra label in any cut extending the current choice.
int disjoint_paths_bound(const Instance& inst, std::vector<char> mask) {
    int count = 0;
    for (;;) {
        const StPath path = bfs_path_avoiding(inst, mask);
        if (path.empty()) return count;
        ++count;
        for (int l : distinct_path_labels(inst, path)) mask[static_cast<std::size_t>(l)] = 1;
    }
}

struct BnbSearch {
    const Instance& inst;
    long long node_guard;
    long long nodes = 0;
    int best_size = 0;
    std::vector<int> best_witness;
    std::vector<char> chosen_mask;
    std::vector<int> chosen;
    std::vector<char> excluded;
    std::vector<int> edge_multiplicity; // per label, in the whole instance

    explicit BnbSearch(const Instance& i, long long guard)
        : inst(i), node_guard(guard),
          chosen_mask(static_cast<std::size_t>(i.label_count), 0),
          excluded(static_cast<std::size_t>(i.label_count), 0),
          edge_multiplicity(static_cast<std::size_t>(i.label_count), 0) {
        for (const Edge& e : i.edges) ++edge_multiplicity[static_cast<std::size_t>(e.label)];
    }

    void offer(const std::vector<int>& witness) {
        std::vector<int> sorted = witness;
        std::sort(sorted.begin(), sorted.end());
        const int size = static_cast<int>(sorted.size());
        if (size < best_size || (size == best_size && sorted < best_witness)) {
            best_size = size;
            best_witness = std::move(sorted);
        }
    }

    void run() {
        if (++nodes > node_guard)
            throw ResourceError("branch-and-bound node guard exceeded (" +
                                std::to_string(node_guard) + " nodes)");
        const StPath path = bfs_path_avoiding(inst, chosen_mask);
        if (path.empty()) {
            offer(chosen);
            return;
        }
        // Nodes that can only produce strictly larger cuts are pruned; equal
        // sizes are kept so the lexicographic tie-break sees every optimum.
        const int bound = static_cast<int>(chosen.size()) + disjoint_paths_bound(inst, chosen_mask);
        if (bound > best_size) return;

        std::vector<int> branch = distinct_path_labels(inst, path);
        branch.erase(std::remove_if(branch.begin(), branch.end(),
                                    [&](int l) { return excluded[static_cast<std::size_t>(l)]; }),
                     branch.end());
        // High-multiplicity labels first: they kill more paths.
        std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
            return edge_multiplicity[static_cast<std::size_t>(a)] >
                   edge_multiplicity[static_cast<std::size_t>(b)];
        });

        std::vector<int> newly_excluded;
        for (int label : branch) {
            chosen_mask[static_cast<std::size_t>(label)] = 1;
            chosen.push_back(label);
            run();
            chosen.pop_back();
            chosen_mask[static_cast<std::size_t>(label)] = 0;
            excluded[static_cast<std::size_t>(label)] = 1;
            newly_excluded.push_back(label);
        }
        for (int label : newly_excluded) excluded[static_cast<std::size_t>(label)] = 0;
    }
};

} // namespace

CutResult min_label_cut_exhaustive(const Instance& inst, std::optional<int> cap,
                                   long long level_guard) {
    return exhaustive_impl(inst, cap, level_guard, true);
}

CutResult min_label_cut_exhaustive_serial(const Instance& inst, std::optional<int> cap,
                                          long long level_guard) {
    return exhaustive_impl(inst, cap, level_guard, false);
}

CutResult min_label_cut_bnb(const Instance& inst, long long node_guard) {
    CutResult seed = label_cut_upper_bound_via_min_cut(inst);
    BnbSearch search(inst, node_guard);
    search.best_size = seed.size;
    search.best_witness = seed.witness;
    search.run();

    CutResult res;
    res.method = "bnb";
    res.size = search.best_size;
    res.witness = std::move(search.best_witness);
    res.nodes = search.nodes;
    return res;
}

CutResult label_cut_upper_bound_via_min_cut(const Instance& inst) {
    // Unit-capacity max flow; undirected edges become arc pairs.
    struct Arc {
        int to;
        int cap;
        int rev;  // index of the reverse arc in graph[to]
        int edge; // original edge id, -1 for pure residual arcs
    };
    std::vector<std::vector<Arc>> graph(static_cast<std::size_t>(inst.vertex_count));
    auto add_arc = [&](int u, int v, int cap, int edge) {
        graph[static_cast<std::size_t>(u)].push_back(
            {v, cap, static_cast<int>(graph[static_cast<std::size_t>(v)].size()), edge});
        graph[static_cast<std::size_t>(v)].push_back(
            {u, 0, static_cast<int>(graph[static_cast<std::size_t>(u)].size()) - 1, -1});
    };
    for (int i = 0; i < inst.edge_count(); ++i) {
        const Edge& e = inst.edges[static_cast<std::size_t>(i)];
        add_arc(e.u, e.v, 1, i);
        if (!inst.directed) add_arc(e.v, e.u, 1, i);
    }

    auto bfs_augment = [&]() -> bool {
        std::vector<std::pair<int, int>> how(static_cast<std::size_t>(inst.vertex_count),
                                             {-1, -1});
        std::queue<int> queue;
        how[static_cast<std::size_t>(inst.source)] = {inst.source, -1};
        queue.push(inst.source);
        while (!queue.empty() && how[static_cast<std::size_t>(inst.sink)].first < 0) {
            const int u = queue.front();
            queue.pop();
            for (int i = 0; i < static_cast<int>(graph[static_cast<std::size_t>(u)].size()); ++i) {
                const Arc& a = graph[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
                if (a.cap <= 0 || how[static_cast<std::size_t>(a.to)].first >= 0) continue;
                how[static_cast<std::size_t>(a.to)] = {u, i};
                queue.push(a.to);
            }
        }
        if (how[static_cast<std::size_t>(inst.sink)].first < 0) return false;
        for (int v = inst.sink; v != inst.source;) {
            const auto [u, i] = how[static_cast<std::size_t>(v)];
            Arc& a = graph[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
            a.cap -= 1;
            graph[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            v = u;
        }
        return true;
    };
    while (bfs_augment()) {
    }

    // Source side of the residual graph; crossing edges form the cut.
    std::vector<char> side(static_cast<std::size_t>(inst.vertex_count), 0);
    std::queue<int> queue;
    side[static_cast<std::size_t>(inst.source)] = 1;
    queue.push(inst.source);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (const Arc& a : graph[static_cast<std::size_t>(u)])
            if (a.cap > 0 && !side[static_cast<std::size_t>(a.to)]) {
                side[static_cast<std::size_t>(a.to)] = 1;
                queue.push(a.to);
            }
    }

    CutResult res;
    res.method = "mincut-labels";
    std::vector<char> taken(static_cast<std::size_t>(inst.label_count), 0);
    for (const Edge& e : inst.edges) {
        const bool crosses = inst.directed
                                 ? (side[static_cast<std::size_t>(e.u)] &&
                                    !side[static_cast<std::size_t>(e.v)])
                                 : (side[static_cast<std::size_t>(e.u)] !=
                                    side[static_cast<std::size_t>(e.v)]);
        if (crosses) taken[static_cast<std::size_t>(e.label)] = 1;
    }
    for (int l = 0; l < inst.label_count; ++l)
        if (taken[static_cast<std::size_t>(l)]) res.witness.push_back(l);
    res.size = static_cast<int>(res.witness.size());
    return res;
}

} // namespace labelcut
