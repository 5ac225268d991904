#pragma once

#include "labelcut/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace labelcut {

// Exponents of the asymptotic parameter family. Carried along when the
// gadget sizes were derived from a target epsilon.
struct AsymptoticParams {
    double epsilon = 0.0;   // in (0, 1/3)
    double delta = 0.0;     // >= 1/(3*epsilon)
    double beta = 0.0;      // delta - 1 + epsilon/2
    long long c = 0;        // intended solution size, ceil(k^{1+delta})
};

struct GadgetParams {
    int k = 2;              // ground set size; one shutter per pair mu < nu
    int d = 1;              // diamonds per chain
    int h = 1;              // chains per shutter
    std::uint64_t seed = 0;
    std::optional<AsymptoticParams> asym;
};

inline int pair_count(int k) { return k * (k - 1) / 2; }

// Rank of (mu, nu), mu < nu, in lexicographic order over [0, k).
int pair_index(int k, int mu, int nu);

// One uniform permutation of [0, d) per chain, drawn from an independent
// substream per (pair, chain). Fully determined by (k, d, h, seed).
struct PermutationTable {
    int k = 0, d = 0, h = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> sigma; // indexed pair_index * h + chain

    const std::vector<int>& chain_sigma(int pair, int chain) const {
        return sigma[static_cast<std::size_t>(pair) * static_cast<std::size_t>(h) +
                     static_cast<std::size_t>(chain)];
    }
};

PermutationTable make_permutation_table(const GadgetParams& params);

// Piece of a larger construction. Vertex 0 is the left endpoint, vertex 1
// the right endpoint, interior vertices start at 2.
struct Fragment {
    int vertex_count = 0;
    std::vector<Edge> edges;
};

// Path of m edges from source to sink, every edge carrying label 0.
Instance make_path_instance(int m);

// d diamonds in series. Diamond j (0-based) is a four-edge cycle whose two
// top edges carry label mu*d + j and whose two bottom edges carry label
// nu*d + sigma[j]. 3d+1 vertices, 4d edges.
Fragment make_chain(int mu, int nu, int d, const std::vector<int>& sigma);

// h chains between shared endpoints; h(3d-1)+2 vertices, 4dh edges. All top
// half-chains carry the same label set; chains differ only in the labels of
// their bottom half-chains.
Fragment make_shutter(int mu, int nu, int d, int h,
                      const std::vector<std::vector<int>>& sigmas);

struct GadgetInstance {
    Instance instance;
    GadgetParams params;
    PermutationTable table;
};

// One shutter per element pair, all sharing the global source (vertex 0) and
// sink (vertex 1). Counts: |V| = 2 + C(k,2) h (3d-1), |E| = 4dh C(k,2),
// q = k d. Identical (params, seed) reproduce the instance byte for byte.
GadgetInstance make_gap_instance(const GadgetParams& params);

// Deterministic reassembly from an explicit permutation table.
GadgetInstance assemble_gadget(const GadgetParams& params, PermutationTable table);

long long predicted_vertex_count(const GadgetParams& params);
long long predicted_edge_count(const GadgetParams& params);

// Smallest admissible exponent delta = 1/(3 epsilon), beta = delta - 1 +
// epsilon/2, then d = ceil(32 k^{2 delta}), h = ceil(k^beta),
// c = ceil(k^{1+delta}). Ceiling keeps the defining inequalities directed
// the right way. Throws std::invalid_argument unless 0 < epsilon < 1/3.
GadgetParams derive_params(double epsilon, int k, std::uint64_t seed);

// Sidecar metadata recording (k, d, h, seed) and every permutation; enough
// to rebuild the instance exactly.
std::string emit_metadata(const GadgetInstance& gi);
GadgetInstance parse_metadata(const std::string& text);

} // namespace labelcut
