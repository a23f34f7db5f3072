#include "chroma/chromatic.hpp"

#include <algorithm>
#include <stdexcept>

namespace chroma {

bool is_proper(const Graph& g, const Colouring& c) {
    for (const auto& v : g.vertices())
        if (c.find(v) == c.end()) throw std::invalid_argument("incomplete colouring");
    for (const auto& e : g.edges())
        if (c.at(e.first) == c.at(e.second)) return false;
    return true;
}

namespace {

// Backtracking k-colourability over an adjacency structure. Colours are
// 1-based; 0 means unassigned.
class KColourSearch {
public:
    KColourSearch(const std::vector<std::vector<std::size_t>>& adj, long long& budget)
        : adj_(adj), budget_(budget), colour_(adj.size(), 0) {}

    bool feasible(int k) {
        k_ = k;
        std::fill(colour_.begin(), colour_.end(), 0);
        max_used_ = 0;
        return extend(0);
    }

private:
    const std::vector<std::vector<std::size_t>>& adj_;
    long long& budget_;
    std::vector<int> colour_;
    int k_ = 0;
    int max_used_ = 0;

    int saturation(std::size_t v) const {
        unsigned long long mask = 0;
        for (std::size_t w : adj_[v])
            if (colour_[w]) mask |= 1ull << (colour_[w] - 1);
        int count = 0;
        while (mask) {
            mask &= mask - 1;
            ++count;
        }
        return count;
    }

    // Most saturated uncoloured vertex; ties by degree, then smallest index.
    std::size_t pick_vertex() const {
        std::size_t best = adj_.size();
        int best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (colour_[v]) continue;
            int sat = saturation(v);
            int deg = static_cast<int>(adj_[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend(std::size_t assigned) {
        if (assigned == adj_.size()) return true;
        std::size_t v = pick_vertex();

        // Symmetry breaking: at most one brand-new colour per step.
        int limit = std::min(k_, max_used_ + 1);
        for (int c = 1; c <= limit; ++c) {
            if (--budget_ < 0) throw std::runtime_error("instance too large");
            bool clash = false;
            for (std::size_t w : adj_[v])
                if (colour_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            colour_[v] = c;
            int prev_max = max_used_;
            max_used_ = std::max(max_used_, c);
            if (extend(assigned + 1)) return true;
            colour_[v] = 0;
            max_used_ = prev_max;
        }
        return false;
    }
};

}  // namespace

int chromatic_number_exact(const Graph& g, const SolverLimits& limits) {
    // 64 is a hard cap from the saturation bitmask, above any sensible bound.
    if (g.order() > limits.max_order || g.order() > 64)
        throw std::runtime_error("instance too large");
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;

    auto adj = g.adjacency();
    long long budget = limits.node_budget;
    KColourSearch search(adj, budget);
    for (int k = 2; k <= static_cast<int>(g.order()); ++k)
        if (search.feasible(k)) return k;
    return static_cast<int>(g.order());  // unreachable: k = order always feasible
}

std::vector<int> colour_weights(const ColouredGraph& cg) {
    std::vector<int> weights(static_cast<std::size_t>(cg.cluster.num_colours()), 0);
    for (const auto& [vertex, colour] : cg.colouring)
        ++weights[static_cast<std::size_t>(colour - 1)];
    return weights;
}

}  // namespace chroma
