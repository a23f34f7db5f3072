#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "chroma/chromatic.hpp"
#include "chroma/embodiment.hpp"
#include "support/generators.hpp"

using namespace chroma;

namespace {

VertexLabel v(int i, int j) { return VertexLabel{i, j}; }

std::set<EdgeLabel> edge_set(const ColouredGraph& cg) {
    return {cg.graph.edges().begin(), cg.graph.edges().end()};
}

bool is_min_edge_tree(const ColouredGraph& cg) {
    GraphStats st = graph_stats(cg.graph);
    return st.connected && st.acyclic &&
           st.size == static_cast<std::size_t>(cg.cluster.total() - 1) &&
           is_proper(cg.graph, cg.colouring);
}

// The explicit path ordering for the cluster [6,4,3,2] discussed with the
// rainbow-completion claim.
ColouredGraph explicit_path_6432() {
    std::vector<VertexLabel> order{v(1, 1), v(2, 1), v(1, 2), v(2, 2), v(1, 3),
                                   v(2, 3), v(1, 4), v(2, 4), v(1, 5), v(3, 1),
                                   v(1, 6), v(3, 2), v(4, 1), v(3, 3), v(4, 2)};
    std::vector<EdgeLabel> edges;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.push_back({order[i], order[i + 1]});
    Colouring colouring;
    for (const auto& u : order) colouring.emplace(u, u.class_index);
    return ColouredGraph::make(Graph::from(order, edges), colouring, ColourCluster({6, 4, 3, 2}));
}

}  // namespace

TEST_CASE("type1 tree small shapes") {
    ColouredGraph star = type1_tree(ColourCluster({2, 1}));
    CHECK(edge_set(star) ==
          std::set<EdgeLabel>{{v(1, 1), v(2, 1)}, {v(1, 2), v(2, 1)}});

    ColouredGraph single = type1_tree(ColourCluster({1, 1}));
    CHECK(edge_set(single) == std::set<EdgeLabel>{{v(1, 1), v(2, 1)}});

    ColouredGraph fig1 = type1_tree(ColourCluster({5, 4, 3, 3}));
    CHECK(fig1.graph.order() == 15);
    CHECK(fig1.graph.size() == 14);
    CHECK(is_min_edge_tree(fig1));

    CHECK_THROWS(type1_tree(ColourCluster({3})));
}

TEST_CASE("type2 tree small shapes") {
    ColouredGraph g = type2_tree(ColourCluster({2, 2, 1}));
    CHECK(edge_set(g) == std::set<EdgeLabel>{{v(1, 1), v(2, 1)},
                                             {v(1, 1), v(2, 2)},
                                             {v(2, 1), v(3, 1)},
                                             {v(1, 2), v(2, 1)}});

    ColouredGraph p3 = type2_tree(ColourCluster({2, 1}));
    CHECK(edge_set(p3) == std::set<EdgeLabel>{{v(1, 1), v(2, 1)}, {v(1, 2), v(2, 1)}});

    ColouredGraph fig1 = type2_tree(ColourCluster({5, 4, 3, 3}));
    CHECK(fig1.graph.order() == 15);
    CHECK(fig1.graph.size() == 14);
    CHECK(is_min_edge_tree(fig1));

    // backbone path across the representatives
    for (int i = 1; i < 4; ++i) CHECK(fig1.graph.has_edge(v(i, 1), v(i + 1, 1)));
}

TEST_CASE("completion adds the representative clique") {
    ColouredGraph two = type1_tree(ColourCluster({2, 1}));
    CHECK(complete_embodiment(two, TreeKind::type1).graph == two.graph);

    ColouredGraph fig1 = complete_embodiment(type1_tree(ColourCluster({5, 4, 3, 3})),
                                             TreeKind::type1);
    CHECK(fig1.graph.size() == 17);
    CHECK(is_proper(fig1.graph, fig1.colouring));

    ColouredGraph k3 = complete_embodiment(type2_tree(ColourCluster({1, 1, 1})),
                                           TreeKind::type2);
    CHECK(k3.graph.size() == 3);
    CHECK(chromatic_number_exact(k3.graph) == 3);
}

TEST_CASE("completion wants the representatives present") {
    ColouredGraph tree = type1_tree(ColourCluster({2, 2}));
    // strip v_{2,1} to break the representative set
    std::vector<VertexLabel> rest;
    std::vector<EdgeLabel> kept;
    for (const auto& u : tree.graph.vertices())
        if (u != v(2, 1)) rest.push_back(u);
    for (const auto& e : tree.graph.edges())
        if (e.first != v(2, 1) && e.second != v(2, 1)) kept.push_back(e);
    Colouring colouring = tree.colouring;
    colouring.erase(v(2, 1));
    ColouredGraph broken = ColouredGraph::make(Graph::from(rest, kept), colouring,
                                               ColourCluster({2, 1}));
    CHECK_THROWS_WITH(complete_embodiment(broken, TreeKind::type1), "not a Type-I tree");
}

TEST_CASE("null embodiment") {
    ColouredGraph k1 = null_embodiment(ColourCluster({1}));
    CHECK(k1.graph.order() == 1);
    CHECK(k1.graph.size() == 0);

    ColouredGraph four = null_embodiment(ColourCluster({4}));
    CHECK(four.graph.order() == 4);
    CHECK(four.graph.size() == 0);
    CHECK_FALSE(graph_stats(four.graph).connected);

    CHECK_THROWS_WITH(null_embodiment(ColourCluster({2, 1})), "not a single-class cluster");
}

TEST_CASE("complete multipartite shapes") {
    CHECK(multipartite_max(ColourCluster({1, 1})).graph.size() == 1);

    ColouredGraph c4 = multipartite_max(ColourCluster({2, 2}));
    CHECK(c4.graph.size() == 4);
    CHECK(chromatic_number_exact(c4.graph) == 2);

    ColouredGraph k3 = multipartite_max(ColourCluster({1, 1, 1}));
    CHECK(k3.graph.size() == 3);
    CHECK(chromatic_number_exact(k3.graph) == 3);
}

TEST_CASE("thorn embodiment shapes") {
    CHECK(thorn_embodiment(ColourCluster({1, 1, 1})).graph.size() == 3);  // bare K3

    ColouredGraph p3 = thorn_embodiment(ColourCluster({2, 1}));
    CHECK(edge_set(p3) == std::set<EdgeLabel>{{v(1, 1), v(2, 1)}, {v(1, 2), v(2, 1)}});

    ColouredGraph big = thorn_embodiment(ColourCluster({5, 4, 3, 3}));
    CHECK(big.graph.order() == 15);
    CHECK(big.graph.size() == 17);
    CHECK(is_proper(big.graph, big.colouring));
}

TEST_CASE("odd cycles") {
    ColouredGraph c5 = odd_cycle_embodiment(2);
    CHECK(c5.graph.order() == 5);
    CHECK(c5.graph.size() == 5);
    CHECK(colour_weights(c5) == std::vector<int>{2, 2, 1});
    CHECK(is_proper(c5.graph, c5.colouring));
    CHECK(chromatic_number_exact(c5.graph) == 3);

    ColouredGraph c7 = odd_cycle_embodiment(3);
    CHECK(colour_weights(c7) == std::vector<int>{3, 3, 1});

    CHECK_THROWS_WITH(odd_cycle_embodiment(1), "requires n >= 5");
}

TEST_CASE("odd cycles are triangle-free") {
    for (int t = 2; t <= 6; ++t) {
        ColouredGraph cyc = odd_cycle_embodiment(t);
        const auto& vs = cyc.graph.vertices();
        bool triangle = false;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                for (std::size_t c = b + 1; c < vs.size(); ++c)
                    if (cyc.graph.has_edge(vs[a], vs[b]) && cyc.graph.has_edge(vs[b], vs[c]) &&
                        cyc.graph.has_edge(vs[a], vs[c]))
                        triangle = true;
        CHECK_FALSE(triangle);
    }
}

TEST_CASE("path-type construction") {
    ColouredGraph paper = path_type_tree(ColourCluster({6, 4, 3, 2}));
    CHECK(paper.graph.order() == 15);
    CHECK(is_min_edge_tree(paper));
    GraphStats st = graph_stats(paper.graph);
    CHECK(st.degree_sequence.front() == 1);
    CHECK(st.degree_sequence.back() == 2);  // a path, nothing higher

    CHECK(path_type_tree(ColourCluster({2, 1})).graph.order() == 3);
    CHECK_THROWS_WITH(path_type_tree(ColourCluster({5, 1})), "path-type construction failed");
}

TEST_CASE("rainbow connected subgraphs") {
    ColourCluster c({6, 4, 3, 2});
    CHECK(has_rainbow_connected_subgraph(type1_tree(c)));
    CHECK(has_rainbow_connected_subgraph(type2_tree(c)));
    CHECK_FALSE(has_rainbow_connected_subgraph(explicit_path_6432()));

    ColouredGraph big = type1_tree(ColourCluster({9, 7, 6}));
    CHECK_THROWS_WITH(has_rainbow_connected_subgraph(big), "instance too large");
}

TEST_CASE("build_embodiment dispatch") {
    CHECK(build_embodiment(ColourCluster({2, 2, 1}), EmbodimentKind::odd_cycle).graph.order() ==
          5);
    CHECK_THROWS(build_embodiment(ColourCluster({2, 1}), EmbodimentKind::odd_cycle));
    CHECK(build_embodiment(ColourCluster({2, 1}), EmbodimentKind::type1_complete).graph.size() ==
          2);
}

TEST_CASE("random clusters satisfy the minimum-edge lemma") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        ColourCluster c = testing::random_cluster(2, 6, 6, rng);
        if (c.total() > 12) continue;
        ColouredGraph t1 = type1_tree(c), t2 = type2_tree(c);
        CHECK(is_min_edge_tree(t1));
        CHECK(is_min_edge_tree(t2));

        long long expected_added = 1ll * (c.num_colours() - 1) * (c.num_colours() - 2) / 2;
        for (auto [tree, kind] : {std::pair{&t1, TreeKind::type1}, std::pair{&t2, TreeKind::type2}}) {
            ColouredGraph done = complete_embodiment(*tree, kind);
            CHECK(static_cast<long long>(done.graph.size() - tree->graph.size()) ==
                  expected_added);
            CHECK(chromatic_number_exact(done.graph) == c.num_colours());
        }

        ColouredGraph thorn = thorn_embodiment(c);
        CHECK(thorn.graph.size() == t1.graph.size() + static_cast<std::size_t>(expected_added));

        // the maximum-edge embodiment contains every completed one
        ColouredGraph multi = multipartite_max(c);
        ColouredGraph done1 = complete_embodiment(t1, TreeKind::type1);
        for (const auto& e : done1.graph.edges()) CHECK(multi.graph.has_edge(e.first, e.second));
        for (const auto& e : thorn.graph.edges()) CHECK(multi.graph.has_edge(e.first, e.second));
    }
}

TEST_CASE("completed embodiments have a unique maximum clique on small cases") {
    for (const auto& sizes : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 2, 2},
                              std::vector<int>{3, 2, 1}, std::vector<int>{2, 2, 1, 1}}) {
        ColourCluster c(sizes);
        const int l = c.num_colours();
        for (EmbodimentKind kind :
             {EmbodimentKind::type1_complete, EmbodimentKind::type2_complete}) {
            ColouredGraph done = build_embodiment(c, kind);
            const auto& vs = done.graph.vertices();
            // enumerate all l-subsets, count cliques of size l; there is no
            // larger clique since the graph is l-colourable
            std::vector<int> pick(vs.size(), 0);
            std::fill(pick.begin(), pick.begin() + l, 1);
            std::sort(pick.begin(), pick.end());
            int cliques = 0;
            do {
                std::vector<VertexLabel> subset;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    if (pick[i]) subset.push_back(vs[i]);
                bool clique = true;
                for (std::size_t a = 0; a < subset.size() && clique; ++a)
                    for (std::size_t b = a + 1; b < subset.size() && clique; ++b)
                        if (!done.graph.has_edge(subset[a], subset[b])) clique = false;
                if (clique) ++cliques;
            } while (std::next_permutation(pick.begin(), pick.end()));
            CHECK(cliques == 1);
        }
    }
}
