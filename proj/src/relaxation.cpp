#include "labelcut/relaxation.hpp"

#include "labelcut/errors.hpp"
#include "labelcut/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace labelcut {

namespace {

constexpr double kTieEps = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_x(const Instance& inst, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != inst.label_count)
        throw std::invalid_argument("labeling size does not match label count");
    for (double v : x)
        if (!(v >= 0.0)) throw std::invalid_argument("labeling must be nonnegative");
}

// Distance to the sink under w(e) = x[label(e)], following edges backwards
// when the instance is directed.
std::vector<double> dist_to_sink(const Instance& inst, const std::vector<double>& x) {
    std::vector<std::vector<AdjEntry>> radj;
    const std::vector<std::vector<AdjEntry>>* in = &inst.adj;
    if (inst.directed) {
        radj.assign(static_cast<std::size_t>(inst.vertex_count), {});
        for (int i = 0; i < inst.edge_count(); ++i) {
            const Edge& e = inst.edges[static_cast<std::size_t>(i)];
            radj[static_cast<std::size_t>(e.v)].push_back({e.u, i});
        }
        in = &radj;
    }
    std::vector<double> dist(static_cast<std::size_t>(inst.vertex_count), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(inst.sink)] = 0.0;
    heap.push({0.0, inst.sink});
    while (!heap.empty()) {
        const auto [du, u] = heap.top();
        heap.pop();
        if (du > dist[static_cast<std::size_t>(u)]) continue;
        for (const AdjEntry& a : (*in)[static_cast<std::size_t>(u)]) {
            const double w = x[static_cast<std::size_t>(
                inst.edges[static_cast<std::size_t>(a.edge)].label)];
            if (du + w < dist[static_cast<std::size_t>(a.to)]) {
                dist[static_cast<std::size_t>(a.to)] = du + w;
                heap.push({du + w, a.to});
            }
        }
    }
    return dist;
}

// True when the sink is reachable from `from` using only tight arcs and
// unblocked vertices. Any tight walk shortens to a tight simple path, so
// plain reachability is the right test.
bool sink_reachable_tight(const Instance& inst, const std::vector<double>& x,
                          const std::vector<double>& dist, const std::vector<char>& blocked,
                          int from) {
    if (blocked[static_cast<std::size_t>(from)]) return false;
    std::vector<char> seen(static_cast<std::size_t>(inst.vertex_count), 0);
    std::queue<int> queue;
    seen[static_cast<std::size_t>(from)] = 1;
    queue.push(from);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (u == inst.sink) return true;
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(a.to)] || blocked[static_cast<std::size_t>(a.to)])
                continue;
            const double w = x[static_cast<std::size_t>(
                inst.edges[static_cast<std::size_t>(a.edge)].label)];
            if (dist[static_cast<std::size_t>(u)] <
                w + dist[static_cast<std::size_t>(a.to)] - kTieEps)
                continue; // not tight
            seen[static_cast<std::size_t>(a.to)] = 1;
            queue.push(a.to);
        }
    }
    return false;
}

PathConstraint constraint_from_path(const Instance& inst, StPath path, LpVariant variant,
                                    double weight) {
    PathConstraint pc;
    pc.weight = weight;
    std::map<int, int> multiplicity;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const int u = path[i - 1], v = path[i];
        int label = -1;
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(u)])
            if (a.to == v) {
                label = inst.edges[static_cast<std::size_t>(a.edge)].label;
                break;
            }
        ++multiplicity[label];
    }
    for (const auto& [label, count] : multiplicity) {
        pc.labels.push_back(label);
        pc.coeffs.push_back(variant == LpVariant::lp1 ? count : 1);
    }
    pc.path = std::move(path);
    return pc;
}

} // namespace

PathSearchResult min_weight_path_edge_sum(const Instance& inst, const std::vector<double>& x) {
    check_x(inst, x);
    const std::vector<double> dist = dist_to_sink(inst, x);
    PathSearchResult res;
    if (dist[static_cast<std::size_t>(inst.source)] == kInf) {
        res.connected = false;
        return res;
    }

    // Walk greedily from the source, always taking the smallest neighbor
    // that still reaches the sink through tight arcs. This yields the
    // lexicographically smallest vertex sequence among minimum-weight paths.
    std::vector<char> blocked(static_cast<std::size_t>(inst.vertex_count), 0);
    StPath path{inst.source};
    double weight = 0.0;
    int cur = inst.source;
    while (cur != inst.sink) {
        blocked[static_cast<std::size_t>(cur)] = 1;
        bool advanced = false;
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(cur)]) {
            if (blocked[static_cast<std::size_t>(a.to)]) continue;
            const double w = x[static_cast<std::size_t>(
                inst.edges[static_cast<std::size_t>(a.edge)].label)];
            if (dist[static_cast<std::size_t>(cur)] <
                w + dist[static_cast<std::size_t>(a.to)] - kTieEps)
                continue;
            if (!sink_reachable_tight(inst, x, dist, blocked, a.to)) continue;
            weight += w;
            cur = a.to;
            path.push_back(cur);
            advanced = true;
            break;
        }
        if (!advanced) throw std::logic_error("tight-path reconstruction got stuck");
    }
    res.weight = weight;
    res.path = std::move(path);
    return res;
}

PathSearchResult min_distinct_label_path(const Instance& inst, const std::vector<double>& x,
                                         long long node_guard) {
    check_x(inst, x);

    struct Frame {
        int vertex;
        std::size_t next;  // next adjacency slot to try
        int charged;       // label paid on entry, -1 if already paid
        double enter_weight;
    };

    PathSearchResult best;
    best.connected = false;
    best.weight = kInf;

    std::vector<char> visited(static_cast<std::size_t>(inst.vertex_count), 0);
    std::vector<char> paid(static_cast<std::size_t>(inst.label_count), 0);
    std::vector<Frame> stack;
    std::vector<int> current{inst.source};
    stack.push_back({inst.source, 0, -1, 0.0});
    visited[static_cast<std::size_t>(inst.source)] = 1;
    double weight = 0.0;
    long long nodes = 1;

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.vertex == inst.sink) {
            if (weight < best.weight - kTieEps) {
                best.connected = true;
                best.weight = weight;
                best.path = current;
            }
        }
        bool descended = false;
        if (top.vertex != inst.sink) {
            const auto& neighbors = inst.adj[static_cast<std::size_t>(top.vertex)];
            while (top.next < neighbors.size()) {
                const AdjEntry a = neighbors[top.next++];
                if (visited[static_cast<std::size_t>(a.to)]) continue;
                const int label = inst.edges[static_cast<std::size_t>(a.edge)].label;
                const double add = paid[static_cast<std::size_t>(label)]
                                       ? 0.0
                                       : x[static_cast<std::size_t>(label)];
                if (weight + add >= best.weight - kTieEps) continue;
                if (++nodes > node_guard)
                    throw ResourceError("distinct-label path search guard exceeded (" +
                                        std::to_string(node_guard) + " nodes)");
                int charged = -1;
                if (!paid[static_cast<std::size_t>(label)]) {
                    paid[static_cast<std::size_t>(label)] = 1;
                    charged = label;
                }
                weight += add;
                visited[static_cast<std::size_t>(a.to)] = 1;
                current.push_back(a.to);
                stack.push_back({a.to, 0, charged, weight - add});
                descended = true;
                break;
            }
        }
        if (descended) continue;
        visited[static_cast<std::size_t>(top.vertex)] = 0;
        if (top.charged >= 0) paid[static_cast<std::size_t>(top.charged)] = 0;
        weight = top.enter_weight;
        current.pop_back();
        stack.pop_back();
    }
    return best;
}

PathSearchResult min_distinct_label_path_gadget(const GadgetInstance& gi,
                                                const std::vector<double>& x) {
    const Instance& inst = gi.instance;
    check_x(inst, x);
    const int k = gi.params.k, d = gi.params.d, h = gi.params.h;
    const int interior = 3 * d - 1;

    PathSearchResult best;
    best.connected = false;
    best.weight = kInf;
    int best_pair = -1, best_chain = -1, best_mu = -1, best_nu = -1;

    for (int mu = 0; mu < k; ++mu)
        for (int nu = mu + 1; nu < k; ++nu) {
            const int pair = pair_index(k, mu, nu);
            for (int chain = 0; chain < h; ++chain) {
                const std::vector<int>& sigma = gi.table.chain_sigma(pair, chain);
                double value = 0.0;
                for (int j = 0; j < d; ++j) {
                    const double top = x[static_cast<std::size_t>(mu * d + j)];
                    const double bottom =
                        x[static_cast<std::size_t>(nu * d + sigma[static_cast<std::size_t>(j)])];
                    value += std::min(top, bottom);
                }
                if (value < best.weight - kTieEps) {
                    best.weight = value;
                    best.connected = true;
                    best_pair = pair;
                    best_chain = chain;
                    best_mu = mu;
                    best_nu = nu;
                }
            }
        }

    // ties prefer the top middle vertex, which has the smaller id
    const std::vector<int>& sigma = gi.table.chain_sigma(best_pair, best_chain);
    const int base = 2 + (best_pair * h + best_chain) * interior;
    StPath path{0};
    for (int j = 0; j < d; ++j) {
        const double top = x[static_cast<std::size_t>(best_mu * d + j)];
        const double bottom =
            x[static_cast<std::size_t>(best_nu * d + sigma[static_cast<std::size_t>(j)])];
        path.push_back(base + 3 * j + (top <= bottom ? 0 : 1));
        path.push_back(j + 1 == d ? 1 : base + 3 * j + 2);
    }
    best.path = std::move(path);
    return best;
}

namespace {

std::optional<PathConstraint> wrap(const Instance& inst, PathSearchResult res, LpVariant variant,
                                   double tol) {
    if (!res.connected) throw std::runtime_error("source and sink are already disconnected");
    if (res.weight >= 1.0 - tol) return std::nullopt;
    return constraint_from_path(inst, std::move(res.path), variant, res.weight);
}

} // namespace

std::optional<PathConstraint> separate_lp1(const Instance& inst, const std::vector<double>& x,
                                           double tol) {
    return wrap(inst, min_weight_path_edge_sum(inst, x), LpVariant::lp1, tol);
}

std::optional<PathConstraint> separate_lp2_generic(const Instance& inst,
                                                   const std::vector<double>& x, double tol,
                                                   long long node_guard) {
    return wrap(inst, min_distinct_label_path(inst, x, node_guard), LpVariant::lp2, tol);
}

std::optional<PathConstraint> separate_lp2_gadget(const GadgetInstance& gi,
                                                  const std::vector<double>& x, double tol) {
    return wrap(gi.instance, min_distinct_label_path_gadget(gi, x), LpVariant::lp2, tol);
}

namespace {

RelaxationResult cutting_plane_loop(
    const Instance& inst,
    const std::function<std::optional<PathConstraint>(const std::vector<double>&)>& separate,
    int max_cuts) {
    RelaxationResult res;
    res.x.assign(static_cast<std::size_t>(inst.label_count), 0.0);
    if (!st_connected_without(inst, {})) {
        res.status = RelaxStatus::disconnected;
        return res;
    }

    const std::vector<double> cost(static_cast<std::size_t>(inst.label_count), 1.0);
    std::vector<LpRow> rows;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;

    for (;;) {
        std::optional<PathConstraint> cut = separate(res.x);
        if (!cut) break;
        const auto key = std::make_pair(cut->labels, cut->coeffs);
        if (!seen.emplace(key, res.iterations).second)
            throw std::runtime_error("separation returned a duplicate cut; tolerances inconsistent");
        if (res.iterations >= max_cuts)
            throw ResourceError("cutting-plane iteration cap exceeded (" +
                                std::to_string(max_cuts) + " cuts)");
        ++res.iterations;

        LpRow row;
        row.coeffs.assign(static_cast<std::size_t>(inst.label_count), 0.0);
        for (std::size_t i = 0; i < cut->labels.size(); ++i)
            row.coeffs[static_cast<std::size_t>(cut->labels[i])] =
                static_cast<double>(cut->coeffs[i]);
        row.rhs = 1.0;
        rows.push_back(std::move(row));
        res.cuts.push_back(std::move(*cut));

        LpSolution lp = lp_solve_dense(cost, rows);
        if (lp.status == LpStatus::pivot_limit) throw ResourceError("simplex pivot cap exceeded");
        if (lp.status != LpStatus::optimal)
            throw std::logic_error("relaxation LP must stay feasible and bounded");
        res.x = std::move(lp.x);
        // basic solutions carry rounding dust; the oracles need x >= 0 exactly
        for (double& v : res.x) {
            if (v < -1e-6) throw std::logic_error("simplex returned an infeasible point");
            if (v < 0.0) v = 0.0;
        }
    }

    double value = 0.0;
    for (double v : res.x) value += v;
    res.value = value;
    for (int i = 0; i < static_cast<int>(res.cuts.size()); ++i) {
        double lhs = 0.0;
        const PathConstraint& pc = res.cuts[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < pc.labels.size(); ++j)
            lhs += pc.coeffs[j] * res.x[static_cast<std::size_t>(pc.labels[j])];
        if (std::abs(lhs - 1.0) <= 1e-7) res.active.push_back(i);
    }
    return res;
}

} // namespace

RelaxationResult solve_relaxation(const Instance& inst, LpVariant variant, double tol,
                                  int max_cuts) {
    auto oracle = [&](const std::vector<double>& x) {
        return variant == LpVariant::lp1 ? separate_lp1(inst, x, tol)
                                         : separate_lp2_generic(inst, x, tol);
    };
    return cutting_plane_loop(inst, oracle, max_cuts);
}

RelaxationResult solve_relaxation(const GadgetInstance& gi, LpVariant variant, Lp2Oracle oracle,
                                  double tol, int max_cuts) {
    auto sep = [&](const std::vector<double>& x) -> std::optional<PathConstraint> {
        if (variant == LpVariant::lp1) return separate_lp1(gi.instance, x, tol);
        if (oracle == Lp2Oracle::gadget) return separate_lp2_gadget(gi, x, tol);
        return separate_lp2_generic(gi.instance, x, tol);
    };
    return cutting_plane_loop(gi.instance, sep, max_cuts);
}

std::string emit_lp_text(const std::vector<PathConstraint>& cuts, int label_count) {
    std::ostringstream out;
    out << "Minimize\n obj:";
    for (int l = 0; l < label_count; ++l) out << (l ? " + x" : " x") << l;
    out << "\nSubject To\n";
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        out << " c" << i << ":";
        for (std::size_t j = 0; j < cuts[i].labels.size(); ++j) {
            out << (j ? " + " : " ");
            if (cuts[i].coeffs[j] != 1) out << cuts[i].coeffs[j] << " ";
            out << "x" << cuts[i].labels[j];
        }
        out << " >= 1\n";
    }
    out << "Bounds\nEnd\n";
    return out.str();
}

} // namespace labelcut
