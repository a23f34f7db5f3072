#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "chroma/graph.hpp"

using namespace chroma;

namespace {

VertexLabel v(int i, int j) { return VertexLabel{i, j}; }

Graph path3() {
    return Graph::from({v(1, 1), v(1, 2), v(1, 3)},
                       {{v(1, 1), v(1, 2)}, {v(1, 2), v(1, 3)}});
}

Graph triangle() {
    return Graph::from({v(1, 1), v(2, 1), v(3, 1)},
                       {{v(1, 1), v(2, 1)}, {v(2, 1), v(3, 1)}, {v(1, 1), v(3, 1)}});
}

}  // namespace

TEST_CASE("stats for degenerate and tiny graphs") {
    GraphStats single = graph_stats(Graph::from({v(1, 1)}, {}));
    CHECK(single.order == 1);
    CHECK(single.size == 0);
    CHECK(single.connected);
    CHECK(single.acyclic);

    GraphStats empty = graph_stats(Graph{});
    CHECK(empty.order == 0);
    CHECK(empty.connected);
    CHECK(empty.acyclic);

    GraphStats p3 = graph_stats(path3());
    CHECK(p3.order == 3);
    CHECK(p3.size == 2);
    CHECK(p3.degree_sequence == std::vector<int>{1, 1, 2});
    CHECK(p3.connected);
    CHECK(p3.acyclic);

    GraphStats k3 = graph_stats(triangle());
    CHECK(k3.order == 3);
    CHECK(k3.size == 3);
    CHECK(k3.connected);
    CHECK_FALSE(k3.acyclic);
}

TEST_CASE("add_edges builds the triangle from the path") {
    Graph g = add_edges(path3(), {{v(1, 1), v(1, 3)}});
    CHECK(g.size() == 3);
    CHECK_FALSE(graph_stats(g).acyclic);
}

TEST_CASE("add_edges is idempotent and leaves the vertex set alone") {
    Graph g = path3();
    Graph again = add_edges(g, {{v(1, 1), v(1, 2)}});
    CHECK(again == g);
    CHECK(add_edges(g, {}).vertices() == g.vertices());
}

TEST_CASE("add_edges rejects unknown endpoints and loops") {
    CHECK_THROWS_WITH(add_edges(path3(), {{v(1, 1), v(9, 9)}}), "unknown vertex");
    CHECK_THROWS_WITH(add_edges(path3(), {{v(1, 1), v(1, 1)}}), "loop forbidden");
}

TEST_CASE("from rejects duplicate labels") {
    CHECK_THROWS(Graph::from({v(1, 1), v(1, 1)}, {}));
}

TEST_CASE("edges are stored canonically") {
    Graph g = Graph::from({v(1, 1), v(2, 1)}, {{v(2, 1), v(1, 1)}});
    CHECK(g.edges().front().first == v(1, 1));
    CHECK(g.has_edge(v(2, 1), v(1, 1)));
    CHECK(g.degree(v(1, 1)) == 1);
    CHECK(g.neighbours(v(2, 1)) == std::vector<VertexLabel>{v(1, 1)});
}

TEST_CASE("degree sum is twice the size on random graphs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        std::vector<VertexLabel> vs;
        for (int i = 1; i <= n; ++i) vs.push_back(v(1, i));
        std::vector<EdgeLabel> es;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 3 == 0) es.push_back({v(1, i), v(1, j)});
        Graph g = Graph::from(vs, es);
        GraphStats st = graph_stats(g);
        long long degree_sum = std::accumulate(st.degree_sequence.begin(),
                                               st.degree_sequence.end(), 0ll);
        CHECK(degree_sum == 2ll * static_cast<long long>(st.size));
        CHECK(st.acyclic == (st.size == st.order - st.components));
        // trees are exactly the connected acyclic graphs
        if (st.connected && st.acyclic) CHECK(st.size == st.order - 1);
    }
}
