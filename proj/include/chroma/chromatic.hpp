#ifndef CHROMA_CHROMATIC_HPP
#define CHROMA_CHROMATIC_HPP

#include <cstddef>
#include <vector>

#include "chroma/cluster.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// True iff no edge joins equal colours. Every vertex must be assigned.
bool is_proper(const Graph& g, const Colouring& c);

struct SolverLimits {
    std::size_t max_order = 24;
    long long node_budget = 10'000'000;
};

// Exact chromatic number by iterative deepening on k with saturation-degree
// vertex selection and new-colour symmetry breaking. Deterministic: ties are
// broken by degree, then by smallest vertex label. Throws "instance too
// large" when the order bound or the node budget is exceeded.
int chromatic_number_exact(const Graph& g, const SolverLimits& limits = {});

// Entry i-1 is the number of vertices coloured i.
std::vector<int> colour_weights(const ColouredGraph& cg);

}  // namespace chroma

#endif
