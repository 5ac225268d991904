#include "labelcut/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace labelcut {

Instance make_instance(int vertex_count, int label_count, int source, int sink,
                       bool directed, std::vector<Edge> edges) {
    if (vertex_count < 2) throw std::invalid_argument("instance needs at least two vertices");
    if (label_count < 1) throw std::invalid_argument("label_count must be positive");
    if (source < 0 || source >= vertex_count) throw std::invalid_argument("source out of range");
    if (sink < 0 || sink >= vertex_count) throw std::invalid_argument("sink out of range");
    if (source == sink) throw std::invalid_argument("source and sink must differ");

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self loops are not allowed");
        if (e.label < 0 || e.label >= label_count)
            throw std::invalid_argument("edge label out of range");
        const int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        const std::uint64_t key = (std::uint64_t(a) << 32) | std::uint64_t(b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel edge between " + std::to_string(a) + " and " +
                                        std::to_string(b));
    }

    Instance inst;
    inst.vertex_count = vertex_count;
    inst.label_count = label_count;
    inst.source = source;
    inst.sink = sink;
    inst.directed = directed;
    inst.edges = std::move(edges);
    inst.adj.assign(static_cast<std::size_t>(vertex_count), {});
    for (int i = 0; i < inst.edge_count(); ++i) {
        const Edge& e = inst.edges[static_cast<std::size_t>(i)];
        inst.adj[static_cast<std::size_t>(e.u)].push_back({e.v, i});
        if (!directed) inst.adj[static_cast<std::size_t>(e.v)].push_back({e.u, i});
    }
    // Sorted adjacency makes every traversal in the project deterministic.
    for (auto& list : inst.adj)
        std::sort(list.begin(), list.end(), [](const AdjEntry& x, const AdjEntry& y) {
            return x.to != y.to ? x.to < y.to : x.edge < y.edge;
        });
    return inst;
}

bool st_connected_without(const Instance& inst, const std::vector<char>& label_mask) {
    std::vector<char> visited(static_cast<std::size_t>(inst.vertex_count), 0);
    std::queue<int> queue;
    visited[static_cast<std::size_t>(inst.source)] = 1;
    queue.push(inst.source);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (u == inst.sink) return true;
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(u)]) {
            if (visited[static_cast<std::size_t>(a.to)]) continue;
            const int label = inst.edges[static_cast<std::size_t>(a.edge)].label;
            if (!label_mask.empty() && label_mask[static_cast<std::size_t>(label)]) continue;
            visited[static_cast<std::size_t>(a.to)] = 1;
            queue.push(a.to);
        }
    }
    return false;
}

bool is_label_cut(const Instance& inst, const std::vector<int>& labels) {
    std::vector<char> mask(static_cast<std::size_t>(inst.label_count), 0);
    for (int l : labels) {
        if (l < 0 || l >= inst.label_count)
            throw std::invalid_argument("label id " + std::to_string(l) + " out of range");
        mask[static_cast<std::size_t>(l)] = 1;
    }
    return !st_connected_without(inst, mask);
}

std::vector<int> path_labels(const Instance& inst, const StPath& path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least two vertices");
    if (path.front() != inst.source || path.back() != inst.sink)
        throw std::invalid_argument("path must run from source to sink");
    std::vector<char> visited(static_cast<std::size_t>(inst.vertex_count), 0);
    std::vector<int> labels;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int v = path[i];
        if (v < 0 || v >= inst.vertex_count) throw std::invalid_argument("path vertex out of range");
        if (visited[static_cast<std::size_t>(v)]) throw std::invalid_argument("path repeats a vertex");
        visited[static_cast<std::size_t>(v)] = 1;
        if (i == 0) continue;
        const int u = path[i - 1];
        int edge = -1;
        for (const AdjEntry& a : inst.adj[static_cast<std::size_t>(u)])
            if (a.to == v) {
                edge = a.edge;
                break;
            }
        if (edge < 0)
            throw std::invalid_argument("vertices " + std::to_string(u) + " and " +
                                        std::to_string(v) + " are not adjacent");
        labels.push_back(inst.edges[static_cast<std::size_t>(edge)].label);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

std::vector<int> present_labels(const Instance& inst) {
    std::vector<char> seen(static_cast<std::size_t>(inst.label_count), 0);
    for (const Edge& e : inst.edges) seen[static_cast<std::size_t>(e.label)] = 1;
    std::vector<int> out;
    for (int l = 0; l < inst.label_count; ++l)
        if (seen[static_cast<std::size_t>(l)]) out.push_back(l);
    return out;
}

} // namespace labelcut
