#include "chroma/embodiment.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chroma {

std::string_view to_string(EmbodimentKind kind) {
    switch (kind) {
        case EmbodimentKind::type1_tree: return "type1_tree";
        case EmbodimentKind::type2_tree: return "type2_tree";
        case EmbodimentKind::type1_complete: return "type1_complete";
        case EmbodimentKind::type2_complete: return "type2_complete";
        case EmbodimentKind::thorn: return "thorn";
        case EmbodimentKind::multipartite_max: return "multipartite_max";
        case EmbodimentKind::odd_cycle: return "odd_cycle";
        case EmbodimentKind::path_type: return "path_type";
    }
    return "unknown";
}

namespace {

// All v_{i,j} for the cluster, coloured by class.
std::pair<std::vector<VertexLabel>, Colouring> class_vertices(const ColourCluster& c) {
    std::vector<VertexLabel> vertices;
    Colouring colouring;
    for (int i = 1; i <= c.num_colours(); ++i)
        for (int j = 1; j <= c.size_of(i); ++j) {
            VertexLabel v{i, j};
            vertices.push_back(v);
            colouring.emplace(v, i);
        }
    return {std::move(vertices), std::move(colouring)};
}

ColouredGraph assemble(const ColourCluster& c, std::vector<EdgeLabel> edges) {
    auto [vertices, colouring] = class_vertices(c);
    return ColouredGraph::make(Graph::from(std::move(vertices), std::move(edges)),
                               std::move(colouring), c);
}

}  // namespace

ColouredGraph type1_tree(const ColourCluster& c) {
    if (c.num_colours() < 2) throw std::invalid_argument("Type-I requires l >= 2");
    std::vector<EdgeLabel> edges;
    for (int j = 2; j <= c.num_colours(); ++j)
        for (int k = 1; k <= c.size_of(j); ++k)
            edges.push_back({VertexLabel{1, 1}, VertexLabel{j, k}});
    for (int i = 2; i <= c.size_of(1); ++i)
        edges.push_back({VertexLabel{1, i}, VertexLabel{2, 1}});
    return assemble(c, std::move(edges));
}

ColouredGraph type2_tree(const ColourCluster& c) {
    if (c.num_colours() < 2) throw std::invalid_argument("Type-II requires l >= 2");
    std::vector<EdgeLabel> edges;
    for (int i = 1; i <= c.num_colours() - 1; ++i)
        for (int j = 1; j <= c.size_of(i + 1); ++j)
            edges.push_back({VertexLabel{i, 1}, VertexLabel{i + 1, j}});
    for (int j = 2; j <= c.size_of(1); ++j)
        edges.push_back({VertexLabel{2, 1}, VertexLabel{1, j}});
    return assemble(c, std::move(edges));
}

ColouredGraph complete_embodiment(const ColouredGraph& cg, TreeKind kind) {
    const int l = cg.cluster.num_colours();
    if (l < 2)
        throw std::invalid_argument(kind == TreeKind::type1 ? "not a Type-I tree"
                                                            : "not a Type-II tree");
    for (int i = 1; i <= l; ++i)
        if (!cg.graph.has_vertex(VertexLabel{i, 1}))
            throw std::invalid_argument(kind == TreeKind::type1 ? "not a Type-I tree"
                                                                : "not a Type-II tree");
    std::vector<EdgeLabel> clique;
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            clique.push_back({VertexLabel{i, 1}, VertexLabel{j, 1}});
    return ColouredGraph::make(add_edges(cg.graph, clique), cg.colouring, cg.cluster);
}

ColouredGraph null_embodiment(const ColourCluster& c) {
    if (c.num_colours() != 1) throw std::invalid_argument("not a single-class cluster");
    return assemble(c, {});
}

ColouredGraph multipartite_max(const ColourCluster& c) {
    if (c.num_colours() < 2) throw std::invalid_argument("multipartite requires l >= 2");
    std::vector<EdgeLabel> edges;
    for (int i = 1; i <= c.num_colours(); ++i)
        for (int j = i + 1; j <= c.num_colours(); ++j)
            for (int a = 1; a <= c.size_of(i); ++a)
                for (int b = 1; b <= c.size_of(j); ++b)
                    edges.push_back({VertexLabel{i, a}, VertexLabel{j, b}});
    return assemble(c, std::move(edges));
}

ColouredGraph thorn_embodiment(const ColourCluster& c) {
    if (c.num_colours() < 2) throw std::invalid_argument("thorn requires l >= 2");
    std::vector<EdgeLabel> edges;
    for (int i = 1; i <= c.num_colours(); ++i)
        for (int j = i + 1; j <= c.num_colours(); ++j)
            edges.push_back({VertexLabel{i, 1}, VertexLabel{j, 1}});
    for (int i = 1; i <= c.num_colours(); ++i) {
        VertexLabel anchor = i == 1 ? VertexLabel{2, 1} : VertexLabel{1, 1};
        for (int j = 2; j <= c.size_of(i); ++j)
            edges.push_back({VertexLabel{i, j}, anchor});
    }
    return assemble(c, std::move(edges));
}

ColouredGraph odd_cycle_embodiment(int t) {
    if (t < 2) throw std::invalid_argument("requires n >= 5");
    std::vector<VertexLabel> ring;
    for (int j = 1; j <= t; ++j) {
        ring.push_back(VertexLabel{1, j});
        ring.push_back(VertexLabel{2, j});
    }
    ring.push_back(VertexLabel{3, 1});
    std::vector<EdgeLabel> edges;
    for (std::size_t i = 0; i < ring.size(); ++i)
        edges.push_back({ring[i], ring[(i + 1) % ring.size()]});
    return assemble(ColourCluster({t, t, 1}), std::move(edges));
}

ColouredGraph path_type_tree(const ColourCluster& c) {
    if (c.num_colours() < 2) throw std::invalid_argument("path-type requires l >= 2");
    std::vector<int> remaining = c.sizes();
    std::vector<VertexLabel> path;
    int last_colour = 0;
    for (long long step = 0; step < c.total(); ++step) {
        int pick = 0;
        for (int i = 1; i <= c.num_colours(); ++i) {
            if (i == last_colour) continue;
            int left = remaining[static_cast<std::size_t>(i - 1)];
            if (left > 0 && (pick == 0 || left > remaining[static_cast<std::size_t>(pick - 1)]))
                pick = i;
        }
        if (pick == 0) throw std::runtime_error("path-type construction failed");
        int& left = remaining[static_cast<std::size_t>(pick - 1)];
        path.push_back(VertexLabel{pick, c.size_of(pick) - left + 1});
        --left;
        last_colour = pick;
    }
    std::vector<EdgeLabel> edges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1]});
    return assemble(c, std::move(edges));
}

bool has_rainbow_connected_subgraph(const ColouredGraph& cg, std::size_t order_bound) {
    if (cg.graph.order() > order_bound) throw std::runtime_error("instance too large");
    const int l = cg.cluster.num_colours();

    std::vector<std::vector<std::size_t>> by_colour(static_cast<std::size_t>(l));
    for (const auto& [vertex, colour] : cg.colouring)
        by_colour[static_cast<std::size_t>(colour - 1)].push_back(cg.graph.index_of(vertex));

    auto adj = cg.graph.adjacency();
    std::vector<std::size_t> chosen(static_cast<std::size_t>(l));
    std::vector<bool> in_set(cg.graph.order(), false);

    auto connected_choice = [&]() {
        std::vector<std::size_t> stack{chosen[0]};
        std::vector<bool> seen(cg.graph.order(), false);
        seen[chosen[0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v])
                if (in_set[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == static_cast<std::size_t>(l);
    };

    // One vertex per colour class, exhaustively.
    auto search = [&](auto&& self, int colour) -> bool {
        if (colour == l) return connected_choice();
        for (std::size_t v : by_colour[static_cast<std::size_t>(colour)]) {
            chosen[static_cast<std::size_t>(colour)] = v;
            in_set[v] = true;
            if (self(self, colour + 1)) {
                in_set[v] = false;
                return true;
            }
            in_set[v] = false;
        }
        return false;
    };
    return search(search, 0);
}

ColouredGraph build_embodiment(const ColourCluster& c, EmbodimentKind kind) {
    switch (kind) {
        case EmbodimentKind::type1_tree: return type1_tree(c);
        case EmbodimentKind::type2_tree: return type2_tree(c);
        case EmbodimentKind::type1_complete:
            return complete_embodiment(type1_tree(c), TreeKind::type1);
        case EmbodimentKind::type2_complete:
            return complete_embodiment(type2_tree(c), TreeKind::type2);
        case EmbodimentKind::thorn: return thorn_embodiment(c);
        case EmbodimentKind::multipartite_max: return multipartite_max(c);
        case EmbodimentKind::odd_cycle: {
            const auto& sizes = c.sizes();
            if (sizes.size() != 3 || sizes[0] != sizes[1] || sizes[2] != 1)
                throw std::invalid_argument("odd cycle needs a cluster of shape [t,t,1]");
            return odd_cycle_embodiment(sizes[0]);
        }
        case EmbodimentKind::path_type: return path_type_tree(c);
    }
    throw std::invalid_argument("unknown embodiment kind");
}

}  // namespace chroma
