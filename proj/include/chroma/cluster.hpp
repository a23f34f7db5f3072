#ifndef CHROMA_CLUSTER_HPP
#define CHROMA_CLUSTER_HPP

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Colour cluster: ordered colour-class sizes [r_1, ..., r_l], every r_i >= 1.
class ColourCluster {
public:
    explicit ColourCluster(std::vector<int> sizes);

    const std::vector<int>& sizes() const { return sizes_; }
    int num_colours() const { return static_cast<int>(sizes_.size()); }  // l
    long long total() const;                                             // sum r_i
    int size_of(int colour) const { return sizes_.at(static_cast<std::size_t>(colour - 1)); }

    bool operator==(const ColourCluster&) const = default;

private:
    std::vector<int> sizes_;
};

// Accepts "5,4,3,3", a JSON array "[5,4,3,3]", or {"classes":[5,4,3,3]}.
ColourCluster parse_cluster(std::string_view text);

// Bijection on colour indices {1..l}; image()[i-1] is where colour i goes.
class PermutationMap {
public:
    explicit PermutationMap(std::vector<int> image);
    static PermutationMap identity(int num_colours);

    int num_colours() const { return static_cast<int>(image_.size()); }
    int apply(int colour) const { return image_.at(static_cast<std::size_t>(colour - 1)); }
    const std::vector<int>& image() const { return image_; }

    // (*this) after `first`: colour i -> this(first(i)).
    PermutationMap compose_after(const PermutationMap& first) const;

    bool operator==(const PermutationMap&) const = default;

private:
    std::vector<int> image_;
};

using Colouring = std::map<VertexLabel, int>;

// A graph together with a total colour assignment whose class cardinalities
// match the cluster. make() validates all three against each other.
struct ColouredGraph {
    Graph graph;
    Colouring colouring;
    ColourCluster cluster;

    static ColouredGraph make(Graph graph, Colouring colouring, ColourCluster cluster);

    int colour_of(const VertexLabel& v) const;
};

// Stable non-increasing reorder. The returned map sends original colour
// indices to their new positions.
std::pair<ColourCluster, PermutationMap> canonicalize(const ColourCluster& c);

// Relabels every colour i to m.image()[i-1]; graph untouched, cluster permuted
// to keep the weight invariants.
ColouredGraph apply_colour_map(const ColouredGraph& cg, const PermutationMap& m);

}  // namespace chroma

#endif
