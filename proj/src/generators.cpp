#include "labelcut/generators.hpp"

#include "labelcut/errors.hpp"
#include "labelcut/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace labelcut {

namespace {

void check_params(const GadgetParams& p) {
    if (p.k < 2) throw std::invalid_argument("k must be at least 2");
    if (p.d < 1) throw std::invalid_argument("d must be positive");
    if (p.h < 1) throw std::invalid_argument("h must be positive");
}

bool is_permutation(const std::vector<int>& sigma, int d) {
    if (static_cast<int>(sigma.size()) != d) return false;
    std::vector<char> seen(static_cast<std::size_t>(d), 0);
    for (int v : sigma) {
        if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

} // namespace

int pair_index(int k, int mu, int nu) {
    if (!(0 <= mu && mu < nu && nu < k)) throw std::invalid_argument("need 0 <= mu < nu < k");
    // Pairs (0,1), (0,2), ..., (0,k-1), (1,2), ...
    return mu * k - mu * (mu + 1) / 2 + (nu - mu - 1);
}

PermutationTable make_permutation_table(const GadgetParams& params) {
    check_params(params);
    PermutationTable table;
    table.k = params.k;
    table.d = params.d;
    table.h = params.h;
    table.seed = params.seed;
    const int chains = pair_count(params.k) * params.h;
    table.sigma.reserve(static_cast<std::size_t>(chains));
    for (int stream = 0; stream < chains; ++stream) {
        Rng rng(stream_seed(params.seed, static_cast<std::uint64_t>(stream)));
        table.sigma.push_back(rng.permutation(params.d));
    }
    return table;
}

Instance make_path_instance(int m) {
    if (m < 1) throw std::invalid_argument("path length must be positive");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) edges.push_back({i, i + 1, 0});
    return make_instance(m + 1, 1, 0, m, false, std::move(edges));
}

Fragment make_chain(int mu, int nu, int d, const std::vector<int>& sigma) {
    if (mu == nu) throw std::invalid_argument("chain elements must differ");
    if (mu < 0 || nu < 0) throw std::invalid_argument("negative element id");
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (!is_permutation(sigma, d)) throw std::invalid_argument("sigma is not a permutation of [0, d)");

    // Interior layout per diamond j: top middle 2+3j, bottom middle 3+3j,
    // right junction 4+3j (the last diamond ends at vertex 1 instead).
    Fragment f;
    f.vertex_count = 3 * d + 1;
    f.edges.reserve(4 * static_cast<std::size_t>(d));
    int left = 0;
    for (int j = 0; j < d; ++j) {
        const int top = 2 + 3 * j;
        const int bottom = 3 + 3 * j;
        const int right = (j + 1 == d) ? 1 : 4 + 3 * j;
        const int top_label = mu * d + j;
        const int bottom_label = nu * d + sigma[static_cast<std::size_t>(j)];
        f.edges.push_back({left, top, top_label});
        f.edges.push_back({top, right, top_label});
        f.edges.push_back({left, bottom, bottom_label});
        f.edges.push_back({bottom, right, bottom_label});
        left = right;
    }
    return f;
}

Fragment make_shutter(int mu, int nu, int d, int h,
                      const std::vector<std::vector<int>>& sigmas) {
    if (h < 1) throw std::invalid_argument("h must be positive");
    if (static_cast<int>(sigmas.size()) != h)
        throw std::invalid_argument("expected " + std::to_string(h) + " permutations, got " +
                                    std::to_string(sigmas.size()));
    Fragment f;
    const int interior_per_chain = 3 * d - 1;
    f.vertex_count = 2 + h * interior_per_chain;
    f.edges.reserve(4 * static_cast<std::size_t>(d) * static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) {
        Fragment chain = make_chain(mu, nu, d, sigmas[static_cast<std::size_t>(i)]);
        const int base = 2 + i * interior_per_chain;
        for (Edge e : chain.edges) {
            if (e.u >= 2) e.u = base + (e.u - 2);
            if (e.v >= 2) e.v = base + (e.v - 2);
            f.edges.push_back(e);
        }
    }
    return f;
}

long long predicted_vertex_count(const GadgetParams& p) {
    return 2 + static_cast<long long>(pair_count(p.k)) * p.h * (3LL * p.d - 1);
}

long long predicted_edge_count(const GadgetParams& p) {
    return 4LL * p.d * p.h * pair_count(p.k);
}

GadgetInstance assemble_gadget(const GadgetParams& params, PermutationTable table) {
    check_params(params);
    if (table.k != params.k || table.d != params.d || table.h != params.h)
        throw std::invalid_argument("permutation table does not match the parameters");
    for (const auto& sigma : table.sigma)
        if (!is_permutation(sigma, params.d))
            throw std::invalid_argument("invalid permutation in table");
    if (static_cast<int>(table.sigma.size()) != pair_count(params.k) * params.h)
        throw std::invalid_argument("wrong number of permutations in table");

    const int interior_per_chain = 3 * params.d - 1;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(predicted_edge_count(params)));
    // Shutters in lexicographic (mu, nu) order, chains by index, diamonds
    // left to right, top middle before bottom middle. Global source is 0,
    // sink is 1; interior blocks follow contiguously.
    for (int mu = 0; mu < params.k; ++mu) {
        for (int nu = mu + 1; nu < params.k; ++nu) {
            const int pair = pair_index(params.k, mu, nu);
            std::vector<std::vector<int>> sigmas;
            sigmas.reserve(static_cast<std::size_t>(params.h));
            for (int i = 0; i < params.h; ++i) sigmas.push_back(table.chain_sigma(pair, i));
            Fragment shutter = make_shutter(mu, nu, params.d, params.h, sigmas);
            const int base = 2 + pair * params.h * interior_per_chain;
            for (Edge e : shutter.edges) {
                if (e.u >= 2) e.u = base + (e.u - 2);
                if (e.v >= 2) e.v = base + (e.v - 2);
                edges.push_back(e);
            }
        }
    }
    Instance inst = make_instance(static_cast<int>(predicted_vertex_count(params)),
                                  params.k * params.d, 0, 1, false, std::move(edges));
    return GadgetInstance{std::move(inst), params, std::move(table)};
}

GadgetInstance make_gap_instance(const GadgetParams& params) {
    return assemble_gadget(params, make_permutation_table(params));
}

GadgetParams derive_params(double epsilon, int k, std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0))
        throw std::invalid_argument("epsilon must lie in (0, 1/3)");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    AsymptoticParams a;
    a.epsilon = epsilon;
    a.delta = 1.0 / (3.0 * epsilon);
    a.beta = a.delta - 1.0 + epsilon / 2.0;
    a.c = static_cast<long long>(std::ceil(std::pow(double(k), 1.0 + a.delta)));

    GadgetParams p;
    p.k = k;
    p.seed = seed;
    const double d_real = 32.0 * std::pow(double(k), 2.0 * a.delta);
    const double h_real = std::pow(double(k), a.beta);
    if (!(std::ceil(d_real) <= 1073741824.0) || !(std::ceil(h_real) <= 1073741824.0))
        throw ResourceError("derived gadget sizes d=" + std::to_string(d_real) +
                            " h=" + std::to_string(h_real) +
                            " are out of generator range; use a larger epsilon or smaller k");
    p.d = static_cast<int>(std::ceil(d_real));
    p.h = static_cast<int>(std::ceil(h_real));
    p.asym = a;
    return p;
}

std::string emit_metadata(const GadgetInstance& gi) {
    std::ostringstream out;
    out << "labelcut-meta 1\n";
    out << "params " << gi.params.k << " " << gi.params.d << " " << gi.params.h << " "
        << gi.params.seed << "\n";
    if (gi.params.asym) {
        const AsymptoticParams& a = *gi.params.asym;
        out.precision(17);
        out << "asym " << a.epsilon << " " << a.delta << " " << a.beta << " " << a.c << "\n";
    }
    for (int mu = 0; mu < gi.params.k; ++mu)
        for (int nu = mu + 1; nu < gi.params.k; ++nu) {
            const int pair = pair_index(gi.params.k, mu, nu);
            for (int i = 0; i < gi.params.h; ++i) {
                out << "perm " << mu << " " << nu << " " << i;
                for (int image : gi.table.chain_sigma(pair, i)) out << " " << image;
                out << "\n";
            }
        }
    return out.str();
}

GadgetInstance parse_metadata(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next = [&](std::string& l) {
        while (std::getline(in, l)) {
            ++lineno;
            if (!l.empty() && l[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next(line)) throw ParseError(lineno + 1, "missing header");
    if (line.rfind("labelcut-meta ", 0) != 0) throw ParseError(lineno, "bad magic, expected 'labelcut-meta <version>'");
    if (line != "labelcut-meta 1") throw VersionError("unsupported metadata version '" + line.substr(14) + "'");

    GadgetParams params;
    bool have_params = false;
    PermutationTable table;
    std::vector<std::vector<int>> sigma;

    while (next(line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        std::string extra;
        if (tag == "params") {
            if (!(ls >> params.k >> params.d >> params.h >> params.seed) || (ls >> extra))
                throw ParseError(lineno, "malformed params line");
            have_params = true;
            sigma.assign(static_cast<std::size_t>(pair_count(params.k)) *
                             static_cast<std::size_t>(params.h),
                         {});
        } else if (tag == "asym") {
            AsymptoticParams a;
            if (!(ls >> a.epsilon >> a.delta >> a.beta >> a.c) || (ls >> extra))
                throw ParseError(lineno, "malformed asym line");
            params.asym = a;
        } else if (tag == "perm") {
            if (!have_params) throw ParseError(lineno, "perm before params");
            int mu = 0, nu = 0, chain = 0;
            if (!(ls >> mu >> nu >> chain)) throw ParseError(lineno, "malformed perm line");
            if (!(0 <= mu && mu < nu && nu < params.k))
                throw ParseError(lineno, "perm element pair out of range");
            if (chain < 0 || chain >= params.h) throw ParseError(lineno, "perm chain index out of range");
            std::vector<int> images(static_cast<std::size_t>(params.d));
            for (int j = 0; j < params.d; ++j)
                if (!(ls >> images[static_cast<std::size_t>(j)]))
                    throw ParseError(lineno, "perm line has fewer than d images");
            if (ls >> extra) throw ParseError(lineno, "perm line has more than d images");
            if (!is_permutation(images, params.d))
                throw ParseError(lineno, "perm images are not a permutation of [0, d)");
            const std::size_t slot = static_cast<std::size_t>(pair_index(params.k, mu, nu)) *
                                         static_cast<std::size_t>(params.h) +
                                     static_cast<std::size_t>(chain);
            if (!sigma[slot].empty()) throw ParseError(lineno, "duplicate perm entry");
            sigma[slot] = std::move(images);
        } else {
            throw ParseError(lineno, "unknown record '" + tag + "'");
        }
    }
    if (!have_params) throw ParseError(lineno + 1, "missing params record");
    for (const auto& s : sigma)
        if (s.empty()) throw ParseError(lineno + 1, "missing perm entries");

    table.k = params.k;
    table.d = params.d;
    table.h = params.h;
    table.seed = params.seed;
    table.sigma = std::move(sigma);
    return assemble_gadget(params, std::move(table));
}

} // namespace labelcut
