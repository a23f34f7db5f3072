#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chroma/chromatic.hpp"
#include "chroma/embodiment.hpp"
#include "chroma/zagreb.hpp"
#include "support/generators.hpp"

using namespace chroma;

namespace {

VertexLabel v(int i, int j) { return VertexLabel{i, j}; }

}  // namespace

TEST_CASE("classical indices") {
    CHECK(classical_indices(Graph::from({v(1, 1)}, {})) == ClassicalIndices{0, 0, 0});

    Graph p3 = Graph::from({v(1, 1), v(1, 2), v(1, 3)},
                           {{v(1, 1), v(1, 2)}, {v(1, 2), v(1, 3)}});
    CHECK(classical_indices(p3) == ClassicalIndices{6, 4, 2});

    Graph k3 = Graph::from({v(1, 1), v(1, 2), v(1, 3)},
                           {{v(1, 1), v(1, 2)}, {v(1, 2), v(1, 3)}, {v(1, 1), v(1, 3)}});
    CHECK(classical_indices(k3) == ClassicalIndices{12, 12, 0});
}

TEST_CASE("chromatic indices on hand-checked graphs") {
    ColouredGraph k3 = multipartite_max(ColourCluster({1, 1, 1}));
    CHECK(chromatic_indices(k3) == ChromaticIndices{14, 11, 4});

    // P3 with centre coloured 2, leaves coloured 1
    ColouredGraph p3 = type1_tree(ColourCluster({2, 1}));
    CHECK(chromatic_indices(p3) == ChromaticIndices{6, 4, 2});

    ColouredGraph edgeless = null_embodiment(ColourCluster({4}));
    CHECK(chromatic_indices(edgeless) == ChromaticIndices{4, 0, 0});

    // K1: both edge sums are zero by computation, whatever the stated default
    ColouredGraph k1 = null_embodiment(ColourCluster({1}));
    CHECK(chromatic_indices(k1) == ChromaticIndices{1, 0, 0});
    CHECK(stated_m3_default_for_k1 == 1);
}

TEST_CASE("chromatic indices reject improper colourings") {
    Graph edge = Graph::from({v(1, 1), v(1, 2)}, {{v(1, 1), v(1, 2)}});
    Colouring same{{v(1, 1), 1}, {v(1, 2), 1}};
    ColouredGraph bad = ColouredGraph::make(edge, same, ColourCluster({2}));
    CHECK_THROWS_WITH(chromatic_indices(bad), "not a proper colouring");
}

TEST_CASE("extremal search on the star attains the tree bounds") {
    ColouredGraph star = type1_tree(ColourCluster({3, 1}));  // K_{1,3}, n = 4
    ZagrebExtrema ex = extremal_indices(star);
    CHECK(ex.permutations_examined == 2);
    CHECK(ex.m1.min_value == 7);    // n + 3
    CHECK(ex.m1.max_value == 13);   // 4n - 3
    CHECK(ex.m2.min_value == 6);
    CHECK(ex.m2.max_value == 6);
    CHECK(ex.m3.min_value == 3);
    CHECK(ex.m3.max_value == 3);
    CHECK(ex.m1.argmin.image() == std::vector<int>{1, 2});
    CHECK(ex.m1.argmax.image() == std::vector<int>{2, 1});
}

TEST_CASE("trees with two colours have rigid m2 and m3") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 40; ++trial) {
        ColouredGraph tree = testing::random_bipartite_tree(
            4 + static_cast<int>(rng() % 9), rng);
        if (tree.cluster.num_colours() != 2) continue;
        long long n = static_cast<long long>(tree.graph.order());
        ZagrebExtrema ex = extremal_indices(tree);
        CHECK(ex.m2.min_value == 2 * (n - 1));
        CHECK(ex.m2.max_value == 2 * (n - 1));
        CHECK(ex.m3.min_value == n - 1);
        CHECK(ex.m3.max_value == n - 1);
    }
}

TEST_CASE("symmetric graphs leave m1 constant over permutations") {
    ColouredGraph k3 = multipartite_max(ColourCluster({1, 1, 1}));
    ZagrebExtrema ex = extremal_indices(k3);
    CHECK(ex.permutations_examined == 6);
    CHECK(ex.m1.min_value == 14);
    CHECK(ex.m1.max_value == 14);
    // lexicographic tie-break picks the identity on both sides
    CHECK(ex.m1.argmin.image() == std::vector<int>{1, 2, 3});
    CHECK(ex.m1.argmax.image() == std::vector<int>{1, 2, 3});
}

TEST_CASE("hand-computed extrema for the completed type1 [3,2,1]") {
    ColouredGraph done = build_embodiment(ColourCluster({3, 2, 1}),
                                          EmbodimentKind::type1_complete);
    ZagrebExtrema ex = extremal_indices(done);
    // colour-pair edge counts: E12 = 4, E13 = 1, E23 = 1
    CHECK(ex.m2.min_value == 17);
    CHECK(ex.m2.max_value == 29);
    CHECK(ex.m2.argmin.image() == std::vector<int>{1, 2, 3});
    CHECK(ex.m2.argmax.image() == std::vector<int>{2, 3, 1});
}

TEST_CASE("parallel extremal search equals the sequential one") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        ColourCluster c = testing::random_cluster(2, 5, 4, rng);
        ColouredGraph done = build_embodiment(c, EmbodimentKind::type2_complete);
        ZagrebExtrema seq = extremal_indices(done, 8, 1);
        ZagrebExtrema par = extremal_indices(done, 8, 4);
        for (auto side : {&ZagrebExtrema::m1, &ZagrebExtrema::m2, &ZagrebExtrema::m3}) {
            CHECK((seq.*side).min_value == (par.*side).min_value);
            CHECK((seq.*side).max_value == (par.*side).max_value);
            CHECK((seq.*side).argmin.image() == (par.*side).argmin.image());
            CHECK((seq.*side).argmax.image() == (par.*side).argmax.image());
        }
    }
}

TEST_CASE("factorial guard") {
    ColouredGraph nine = type1_tree(ColourCluster({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_WITH(extremal_indices(nine), "factorial search refused");
}

TEST_CASE("m1 ignores cross-colour edge additions") {
    std::mt19937 rng(67);
    int done = 0;
    while (done < 60) {
        ColourCluster c = testing::random_cluster(2, 5, 4, rng);
        ColouredGraph cg = type2_tree(c);
        // candidate cross-colour non-edges
        std::vector<EdgeLabel> options;
        const auto& vs = cg.graph.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (cg.colour_of(vs[a]) != cg.colour_of(vs[b]) &&
                    !cg.graph.has_edge(vs[a], vs[b]))
                    options.push_back({vs[a], vs[b]});
        if (options.empty()) continue;
        EdgeLabel extra = options[rng() % options.size()];
        ColouredGraph larger = ColouredGraph::make(add_edges(cg.graph, {extra}), cg.colouring,
                                                   cg.cluster);
        CHECK(chromatic_indices(larger).m1 == chromatic_indices(cg).m1);
        ++done;
    }
}

TEST_CASE("m1 extrema agree across embodiments of one cluster") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        ColourCluster c = testing::random_cluster(2, 5, 3, rng);
        ZagrebExtrema a =
            extremal_indices(build_embodiment(c, EmbodimentKind::type1_complete));
        ZagrebExtrema b =
            extremal_indices(build_embodiment(c, EmbodimentKind::type2_complete));
        ZagrebExtrema t = extremal_indices(build_embodiment(c, EmbodimentKind::thorn));
        CHECK(a.m1.min_value == b.m1.min_value);
        CHECK(a.m1.max_value == b.m1.max_value);
        CHECK(a.m1.min_value == t.m1.min_value);
        CHECK(a.m1.max_value == t.m1.max_value);
    }
}

TEST_CASE("identity and reverse attain the m1 extrema on sorted clusters") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        auto [c, map] = canonicalize(testing::random_cluster(2, 6, 5, rng));
        ColouredGraph tree = type1_tree(c);
        ZagrebExtrema ex = extremal_indices(tree);
        ChromaticIndices ident = chromatic_indices(tree);
        ChromaticIndices reversed = chromatic_indices(
            apply_colour_map(tree, heuristic_map(HeuristicKind::reverse, c.num_colours())));
        CHECK(ex.m1.min_value == ident.m1);
        CHECK(ex.m1.max_value == reversed.m1);
    }
}

TEST_CASE("named heuristic maps") {
    CHECK(heuristic_map(HeuristicKind::reverse, 4).image() == std::vector<int>{4, 3, 2, 1});
    CHECK(heuristic_map(HeuristicKind::shift, 4).image() == std::vector<int>{2, 3, 4, 1});
    CHECK(heuristic_map(HeuristicKind::zigzag, 5).image() == std::vector<int>{5, 1, 4, 2, 3});
    CHECK(heuristic_map(HeuristicKind::zigzag, 4).image() == std::vector<int>{4, 1, 3, 2});
    CHECK(heuristic_map(HeuristicKind::reverse, 1).image() == std::vector<int>{1});
    CHECK(heuristic_map(HeuristicKind::shift, 1).image() == std::vector<int>{1});
}

TEST_CASE("bounds sanity: m2 and m3 against size") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        ColourCluster c = testing::random_cluster(2, 5, 4, rng);
        ColouredGraph done = build_embodiment(c, EmbodimentKind::type1_complete);
        ChromaticIndices ix = chromatic_indices(done);
        long long l = c.num_colours(), size = static_cast<long long>(done.graph.size());
        CHECK(ix.m3 <= (l - 1) * size);
        CHECK(ix.m2 <= l * l * size);
    }
}
