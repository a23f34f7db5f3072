#include "chroma/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace chroma {

std::string to_string(const VertexLabel& v) {
    return "v_" + std::to_string(v.class_index) + "_" + std::to_string(v.ordinal);
}

Graph Graph::from(std::vector<VertexLabel> vertices, std::vector<EdgeLabel> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate vertex label");

    auto known = [&](const VertexLabel& v) {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    };
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("loop forbidden");
        if (!known(e.first) || !known(e.second)) throw std::invalid_argument("unknown vertex");
        if (e.second < e.first) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_vertex(const VertexLabel& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(VertexLabel a, VertexLabel b) const {
    if (b < a) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), EdgeLabel{a, b});
}

int Graph::degree(const VertexLabel& v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<VertexLabel> Graph::neighbours(const VertexLabel& v) const {
    std::vector<VertexLabel> out;
    for (const auto& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::index_of(const VertexLabel& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw std::invalid_argument("unknown vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& e : edges_) {
        std::size_t a = index_of(e.first), b = index_of(e.second);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    st.order = g.order();
    st.size = g.size();

    std::vector<int> degree(g.order(), 0);
    auto adj = g.adjacency();
    for (std::size_t v = 0; v < adj.size(); ++v) degree[v] = static_cast<int>(adj[v].size());
    st.degree_sequence = degree;
    std::sort(st.degree_sequence.begin(), st.degree_sequence.end());

    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < g.order(); ++start) {
        if (seen[start]) continue;
        ++st.components;
        stack.push_back(start);
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    st.connected = st.components <= 1;
    // A forest has exactly order - components edges.
    st.acyclic = st.size == st.order - st.components;
    return st;
}

Graph add_edges(const Graph& g, const std::vector<EdgeLabel>& pairs) {
    for (const auto& e : pairs) {
        if (e.first == e.second) throw std::invalid_argument("loop forbidden");
        if (!g.has_vertex(e.first) || !g.has_vertex(e.second))
            throw std::invalid_argument("unknown vertex");
    }
    std::vector<EdgeLabel> merged = g.edges();
    merged.insert(merged.end(), pairs.begin(), pairs.end());
    return Graph::from(g.vertices(), std::move(merged));
}

}  // namespace chroma
