#include "labelcut/instance.hpp"

#include "labelcut/errors.hpp"
#include "labelcut/generators.hpp"
#include "labelcut/instance_io.hpp"
#include "labelcut/rng.hpp"

#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace labelcut;
namespace ts = labelcut::testsupport;

namespace {

// Gadget with every permutation fixed to the identity.
GadgetInstance identity_gadget(int k, int d, int h) {
    GadgetParams params;
    params.k = k;
    params.d = d;
    params.h = h;
    params.seed = 0;
    PermutationTable table;
    table.k = k;
    table.d = d;
    table.h = h;
    std::vector<int> id(static_cast<std::size_t>(d));
    std::iota(id.begin(), id.end(), 0);
    table.sigma.assign(static_cast<std::size_t>(pair_count(k) * h), id);
    return assemble_gadget(params, std::move(table));
}

} // namespace

TEST_CASE("label cut predicate on the two-element identity gadget") {
    const GadgetInstance gi = identity_gadget(2, 2, 1);
    // labels: 0 = (mu 0, j 0), 1 = (mu 0, j 1), 2 = (mu 1, j 0), 3 = (mu 1, j 1)
    CHECK(is_label_cut(gi.instance, {0, 2}));             // kills diamond 0 outright
    CHECK_FALSE(is_label_cut(gi.instance, {0}));          // bottom-bottom path survives
    CHECK_FALSE(is_label_cut(gi.instance, {}));
    CHECK(is_label_cut(gi.instance, {0, 1, 2, 3}));
    CHECK_FALSE(is_label_cut(gi.instance, {0, 1}));       // removing all tops leaves the bottoms
    CHECK_THROWS_AS(is_label_cut(gi.instance, {4}), std::invalid_argument);

    // cross-check against independent path enumeration
    CHECK(ts::is_cut_by_path_enumeration(gi.instance, {0, 2}));
    CHECK_FALSE(ts::is_cut_by_path_enumeration(gi.instance, {0}));
}

TEST_CASE("cut predicate agrees with path enumeration and is monotone") {
    Rng rng(42);
    int connected_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = ts::random_instance(rng, 9, 5);
        const int q = inst.label_count;
        for (int rep = 0; rep < 6; ++rep) {
            const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(q + 1)));
            const std::vector<int> subset = ts::random_labels(rng, q, c);
            const bool cut = is_label_cut(inst, subset);
            CHECK(cut == ts::is_cut_by_path_enumeration(inst, subset));
            if (cut) {
                // supersets of a cut stay cuts
                std::vector<int> bigger = subset;
                for (int l = 0; l < q; ++l)
                    if (!std::count(bigger.begin(), bigger.end(), l)) {
                        bigger.push_back(l);
                        break;
                    }
                CHECK(is_label_cut(inst, bigger));
            }
        }
        if (st_connected_without(inst, {})) {
            ++connected_seen;
            // every path has an edge, so the full label set always cuts
            std::vector<int> all(static_cast<std::size_t>(q));
            std::iota(all.begin(), all.end(), 0);
            CHECK(is_label_cut(inst, all));
        }
    }
    CHECK(connected_seen > 10); // the generator actually produces connected cases
}

TEST_CASE("path labels on gadget and path instances") {
    const GadgetInstance gi = identity_gadget(2, 2, 1);
    // vertices: 0 s, 1 t, 2/3 middles of diamond 0, 4 junction, 5/6 middles of diamond 1
    const StPath top_then_bottom{0, 2, 4, 6, 1};
    CHECK(path_labels(gi.instance, top_then_bottom) == std::vector<int>{0, 3});

    CHECK_THROWS_AS(path_labels(gi.instance, {0, 4, 1}), std::invalid_argument);  // not adjacent
    CHECK_THROWS_AS(path_labels(gi.instance, {0, 2, 4, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(path_labels(gi.instance, {2, 4, 6, 1}), std::invalid_argument); // wrong start

    const Instance path = make_path_instance(5);
    StPath whole(6);
    std::iota(whole.begin(), whole.end(), 0);
    CHECK(path_labels(path, whole) == std::vector<int>{0});
}

TEST_CASE("every simple s-t path of a gadget carries exactly d distinct labels") {
    Rng rng(7);
    for (int k = 2; k <= 3; ++k)
        for (int d = 1; d <= 3; ++d)
            for (int h = 1; h <= 2; ++h) {
                GadgetParams params;
                params.k = k;
                params.d = d;
                params.h = h;
                params.seed = rng.below(1u << 30);
                const GadgetInstance gi = make_gap_instance(params);
                const auto paths = ts::all_simple_paths(gi.instance);
                CHECK(static_cast<int>(paths.size()) == pair_count(k) * h * (1 << d));
                for (const StPath& p : paths)
                    CHECK(static_cast<int>(path_labels(gi.instance, p).size()) == d);
            }
}

TEST_CASE("round trip identity on randomized instances") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Instance inst = ts::random_instance(rng, 12, 6);
        const Instance back = parse_instance(emit_instance(inst));
        CHECK(back.vertex_count == inst.vertex_count);
        CHECK(back.label_count == inst.label_count);
        CHECK(back.source == inst.source);
        CHECK(back.sink == inst.sink);
        CHECK(back.directed == inst.directed);
        REQUIRE(back.edge_count() == inst.edge_count());
        for (int i = 0; i < inst.edge_count(); ++i) {
            CHECK(back.edges[i].u == inst.edges[i].u);
            CHECK(back.edges[i].v == inst.edges[i].v);
            CHECK(back.edges[i].label == inst.edges[i].label);
        }
        CHECK(emit_instance(back) == emit_instance(inst));
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GadgetParams params;
        params.k = 3;
        params.d = 2;
        params.h = 2;
        params.seed = seed;
        const GadgetInstance gi = make_gap_instance(params);
        CHECK(emit_instance(parse_instance(emit_instance(gi.instance))) ==
              emit_instance(gi.instance));
    }
}

TEST_CASE("parser rejects malformed files with line numbers") {
    const std::string good = "labelcut 1\n3 2 2 0 2 0\n0 1 0\n1 2 1\n";
    CHECK(emit_instance(parse_instance(good)) == good);

    SUBCASE("comments are ignored") {
        const std::string commented = "# a comment\nlabelcut 1\n# another\n3 2 2 0 2 0\n0 1 0\n1 2 1\n";
        CHECK(emit_instance(parse_instance(commented)) == good);
    }
    SUBCASE("label id out of range") {
        try {
            parse_instance("labelcut 1\n3 2 2 0 2 0\n0 1 0\n1 2 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("version mismatch") {
        CHECK_THROWS_AS(parse_instance("labelcut 2\n3 2 2 0 2 0\n"), VersionError);
    }
    SUBCASE("vertex out of range") {
        CHECK_THROWS_AS(parse_instance("labelcut 1\n3 1 1 0 2 0\n0 3 0\n"), ParseError);
    }
    SUBCASE("missing edges") {
        CHECK_THROWS_AS(parse_instance("labelcut 1\n3 2 2 0 2 0\n0 1 0\n"), ParseError);
    }
    SUBCASE("trailing content") {
        CHECK_THROWS_AS(parse_instance(good + "0 1 0\n"), ParseError);
    }
    SUBCASE("trailing whitespace") {
        CHECK_THROWS_AS(parse_instance("labelcut 1\n3 2 2 0 2 0 \n0 1 0\n1 2 1\n"), ParseError);
    }
    SUBCASE("parallel edges rejected") {
        CHECK_THROWS_AS(parse_instance("labelcut 1\n3 2 2 0 2 0\n0 1 0\n1 0 1\n"), ParseError);
    }
    SUBCASE("self loop rejected") {
        CHECK_THROWS_AS(parse_instance("labelcut 1\n3 1 1 0 2 0\n1 1 0\n"), ParseError);
    }
}

TEST_CASE("parser survives mangled input without crashing") {
    const std::string good = "labelcut 1\n4 3 2 0 3 0\n0 1 0\n1 2 1\n2 3 0\n";
    Rng rng(3000);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string mutated = good.substr(0, rng.below(good.size() + 1));
        for (int hits = static_cast<int>(rng.below(4)); hits > 0 && !mutated.empty(); --hits)
            mutated[static_cast<std::size_t>(rng.below(mutated.size()))] =
                static_cast<char>(' ' + rng.below(95));
        try {
            (void)parse_instance(mutated); // surviving unchanged inputs is fine
        } catch (const ParseError&) {
        } catch (const VersionError&) {
        }
    }
}

TEST_CASE("instance construction validates its invariants") {
    CHECK_THROWS_AS(make_instance(2, 1, 0, 0, false, {}), std::invalid_argument); // s == t
    CHECK_THROWS_AS(make_instance(2, 0, 0, 1, false, {}), std::invalid_argument); // q < 1
    CHECK_THROWS_AS(make_instance(2, 1, 0, 1, false, {{0, 1, 1}}), std::invalid_argument);
    // labels without edges are fine
    const Instance inst = make_instance(2, 5, 0, 1, false, {{0, 1, 3}});
    CHECK(present_labels(inst) == std::vector<int>{3});
}

TEST_CASE("directed instances orient every edge from u to v") {
    // 0 -> 1 -> 2 connected, but nothing reaches 0 backwards
    const Instance fwd = make_instance(3, 1, 0, 2, true, {{0, 1, 0}, {1, 2, 0}});
    CHECK(st_connected_without(fwd, {}));
    const Instance rev = make_instance(3, 1, 0, 2, true, {{1, 0, 0}, {1, 2, 0}});
    CHECK_FALSE(st_connected_without(rev, {}));
    CHECK(is_label_cut(rev, {}));
}
