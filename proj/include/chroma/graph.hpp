#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

// Vertex v_{i,j}: class_index is the colour class i, ordinal the position j
// within the class. Identity is the pair; ordering is lexicographic.
struct VertexLabel {
    int class_index = 1;
    int ordinal = 1;
    auto operator<=>(const VertexLabel&) const = default;
};

std::string to_string(const VertexLabel& v);  // "v_<i>_<j>"

// Canonical edge: first < second.
using EdgeLabel = std::pair<VertexLabel, VertexLabel>;

// Simple, finite, undirected labelled graph. Immutable after construction;
// derive modified graphs via add_edges. Vertices and edges are kept sorted,
// so iteration order is deterministic everywhere.
class Graph {
public:
    Graph() = default;

    // Validates: unique labels, endpoints present, no loops. Duplicate edges
    // collapse to one (simple graph).
    static Graph from(std::vector<VertexLabel> vertices, std::vector<EdgeLabel> edges);

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const std::vector<EdgeLabel>& edges() const { return edges_; }
    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }

    bool has_vertex(const VertexLabel& v) const;
    bool has_edge(VertexLabel a, VertexLabel b) const;
    int degree(const VertexLabel& v) const;
    std::vector<VertexLabel> neighbours(const VertexLabel& v) const;
    // Position of v in the sorted vertex list; throws if absent.
    std::size_t index_of(const VertexLabel& v) const;
    // Adjacency lists over vertex indices, same order as vertices().
    std::vector<std::vector<std::size_t>> adjacency() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexLabel> vertices_;
    std::vector<EdgeLabel> edges_;
};

struct GraphStats {
    std::size_t order = 0;
    std::size_t size = 0;
    std::vector<int> degree_sequence;  // ascending
    std::size_t components = 0;
    bool connected = true;  // true for order <= 1
    bool acyclic = true;
};

GraphStats graph_stats(const Graph& g);

// Returns a new graph with the given edges merged in. Re-adding an existing
// edge is a no-op; the vertex set never changes.
Graph add_edges(const Graph& g, const std::vector<EdgeLabel>& pairs);

}  // namespace chroma

#endif
