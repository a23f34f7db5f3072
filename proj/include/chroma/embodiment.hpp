#ifndef CHROMA_EMBODIMENT_HPP
#define CHROMA_EMBODIMENT_HPP

#include <cstddef>
#include <string_view>

#include "chroma/cluster.hpp"

namespace chroma {

enum class EmbodimentKind {
    type1_tree,
    type2_tree,
    type1_complete,
    type2_complete,
    thorn,
    multipartite_max,
    odd_cycle,
    path_type,
};

std::string_view to_string(EmbodimentKind kind);

enum class TreeKind { type1, type2 };

// Tree with v_{1,1} joined to every vertex of classes 2..l and the remaining
// class-1 vertices hung on v_{2,1}. Size is total - 1.
ColouredGraph type1_tree(const ColourCluster& c);

// Tree with each representative v_{i,1} joined to all of class i+1, plus
// v_{2,1} picking up the rest of class 1. Contains the backbone path
// v_{1,1} v_{2,1} ... v_{l,1}.
ColouredGraph type2_tree(const ColourCluster& c);

// Adds the clique on the representatives {v_{1,1}, ..., v_{l,1}}; a no-op for
// l = 2. Exactly (l-1)(l-2)/2 new edges.
ColouredGraph complete_embodiment(const ColouredGraph& cg, TreeKind kind);

// l = 1 only: r_1 isolated vertices, all colour 1.
ColouredGraph null_embodiment(const ColourCluster& c);

// Complete l-partite graph on parts r_1..r_l; the maximum-edge embodiment.
ColouredGraph multipartite_max(const ColourCluster& c);

// Clique K_l on the representatives with r_i - 1 pendants of colour i; pendant
// colours i != 1 hang on v_{1,1}, pendants of colour 1 on v_{2,1}.
ColouredGraph thorn_embodiment(const ColourCluster& c);

// C_{2t+1} coloured 1,2,1,2,...,1,2,3 around the cycle; weights [t, t, 1].
ColouredGraph odd_cycle_embodiment(int t);

// Hamiltonian path built greedily: always extend with the largest remaining
// class whose colour differs from the last vertex (ties to the smallest
// colour index). Throws when the greedy step has no legal colour.
ColouredGraph path_type_tree(const ColourCluster& c);

// True iff some connected induced subgraph of order l carries exactly one
// vertex of each colour. Exhaustive over one-vertex-per-class choices.
bool has_rainbow_connected_subgraph(const ColouredGraph& cg, std::size_t order_bound = 20);

// Kind dispatcher used by the CLI and the verification suites. odd_cycle
// expects a cluster of the shape [t, t, 1].
ColouredGraph build_embodiment(const ColourCluster& c, EmbodimentKind kind);

}  // namespace chroma

#endif
