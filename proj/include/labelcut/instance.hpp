#pragma once

#include <vector>

namespace labelcut {

// Edge of an edge-labeled graph. Removing a label removes every edge that
// carries it, at unit cost for the whole group.
struct Edge {
    int u = 0;
    int v = 0;
    int label = 0;
};

struct AdjEntry {
    int to = 0;
    int edge = 0; // index into Instance::edges
};

// Edge-labeled graph with a distinguished source and sink. Immutable after
// construction and safe to share read-only across threads.
//
// Labels are ids in [0, label_count); labels with no edge are permitted.
// The graph is simple in the undirected sense: no self loops and at most one
// edge per unordered vertex pair. When `directed` is set every edge is
// oriented from u to v.
struct Instance {
    int vertex_count = 0;
    int label_count = 0;
    int source = 0;
    int sink = 0;
    bool directed = false;
    std::vector<Edge> edges;
    std::vector<std::vector<AdjEntry>> adj; // out-adjacency; both endpoints when undirected

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Validates ranges, source != sink and simplicity, then builds adjacency.
// Throws std::invalid_argument on any violation.
Instance make_instance(int vertex_count, int label_count, int source, int sink,
                       bool directed, std::vector<Edge> edges);

// Sink reachable from source using only edges whose label is not masked.
// `label_mask` may be empty (nothing removed); otherwise size label_count.
bool st_connected_without(const Instance& inst, const std::vector<char>& label_mask);

// True iff removing every edge whose label lies in `labels` disconnects the
// source from the sink. Label ids outside [0, label_count) are rejected.
bool is_label_cut(const Instance& inst, const std::vector<int>& labels);

// Vertex sequence of a simple s-t path.
using StPath = std::vector<int>;

// Distinct labels on the path's edges, ascending. Throws
// std::invalid_argument unless `path` is a simple s-t path of the instance
// (consecutive vertices adjacent, orientation respected when directed).
std::vector<int> path_labels(const Instance& inst, const StPath& path);

// Labels carried by at least one edge, ascending.
std::vector<int> present_labels(const Instance& inst);

} // namespace labelcut
