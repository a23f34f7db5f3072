#include "chroma/zagreb.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chroma/chromatic.hpp"

namespace chroma {

ClassicalIndices classical_indices(const Graph& g) {
    ClassicalIndices out;
    for (const auto& v : g.vertices()) {
        long long d = g.degree(v);
        out.m1 += d * d;
    }
    for (const auto& e : g.edges()) {
        long long du = g.degree(e.first), dv = g.degree(e.second);
        out.m2 += du * dv;
        out.m3 += std::llabs(du - dv);
    }
    return out;
}

ChromaticIndices chromatic_indices(const ColouredGraph& cg) {
    if (!is_proper(cg.graph, cg.colouring)) throw std::invalid_argument("not a proper colouring");
    ChromaticIndices out;
    for (int j = 1; j <= cg.cluster.num_colours(); ++j)
        out.m1 += static_cast<long long>(cg.cluster.size_of(j)) * j * j;
    for (const auto& e : cg.graph.edges()) {
        long long s = cg.colour_of(e.first), k = cg.colour_of(e.second);
        out.m2 += s * k;
        out.m3 += std::llabs(s - k);
    }
    return out;
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct Candidate {
    long long value = 0;
    std::vector<int> image;
};

// Total orders giving the lexicographically smallest image on value ties.
bool better_min(const Candidate& a, const Candidate& b) {
    return a.value != b.value ? a.value < b.value : a.image < b.image;
}
bool better_max(const Candidate& a, const Candidate& b) {
    return a.value != b.value ? a.value > b.value : a.image < b.image;
}

struct Extremum {
    Candidate min, max;
    bool seeded = false;

    void feed(long long value, const std::vector<int>& image) {
        Candidate c{value, image};
        if (!seeded) {
            min = c;
            max = std::move(c);
            seeded = true;
            return;
        }
        if (better_min(c, min)) min = c;
        if (better_max(c, max)) max = std::move(c);
    }
    void merge(const Extremum& other) {
        if (!other.seeded) return;
        if (!seeded) {
            *this = other;
            return;
        }
        if (better_min(other.min, min)) min = other.min;
        if (better_max(other.max, max)) max = other.max;
    }
};

struct SearchState {
    Extremum m1, m2, m3;
    void feed(const ChromaticIndices& ix, const std::vector<int>& image) {
        m1.feed(ix.m1, image);
        m2.feed(ix.m2, image);
        m3.feed(ix.m3, image);
    }
    void merge(const SearchState& other) {
        m1.merge(other.m1);
        m2.merge(other.m2);
        m3.merge(other.m3);
    }
};

std::vector<std::vector<int>> all_images(int l) {
    std::vector<int> image(static_cast<std::size_t>(l));
    std::iota(image.begin(), image.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(image);
    while (std::next_permutation(image.begin(), image.end()));
    return out;
}

}  // namespace

ZagrebExtrema extremal_indices(const ColouredGraph& cg, int max_colours, int threads) {
    const int l = cg.cluster.num_colours();
    if (l > max_colours) throw std::runtime_error("factorial search refused");
    if (!is_proper(cg.graph, cg.colouring)) throw std::invalid_argument("not a proper colouring");

    auto images = all_images(l);
    auto evaluate_range = [&cg, &images](std::size_t begin, std::size_t end, SearchState& state) {
        for (std::size_t i = begin; i < end; ++i) {
            ColouredGraph mapped = apply_colour_map(cg, PermutationMap(images[i]));
            state.feed(chromatic_indices(mapped), images[i]);
        }
    };

    SearchState state;
    if (threads <= 1 || images.size() < 2) {
        evaluate_range(0, images.size(), state);
    } else {
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), images.size());
        std::vector<SearchState> partial(workers);
        std::vector<std::thread> pool;
        std::size_t chunk = (images.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk, end = std::min(images.size(), begin + chunk);
            pool.emplace_back([&, begin, end, w] { evaluate_range(begin, end, partial[w]); });
        }
        for (auto& t : pool) t.join();
        for (const auto& p : partial) state.merge(p);
    }

    auto pack = [](const Extremum& e) {
        return IndexExtremum{e.min.value, e.max.value, PermutationMap(e.min.image),
                             PermutationMap(e.max.image)};
    };
    return ZagrebExtrema{pack(state.m1), pack(state.m2), pack(state.m3), factorial(l)};
}

std::string_view to_string(HeuristicKind kind) {
    switch (kind) {
        case HeuristicKind::reverse: return "reverse";
        case HeuristicKind::shift: return "shift";
        case HeuristicKind::zigzag: return "zigzag";
    }
    return "unknown";
}

PermutationMap heuristic_map(HeuristicKind kind, int num_colours) {
    if (num_colours < 1) throw std::invalid_argument("invalid permutation");
    std::vector<int> image(static_cast<std::size_t>(num_colours));
    switch (kind) {
        case HeuristicKind::reverse:
            for (int i = 1; i <= num_colours; ++i)
                image[static_cast<std::size_t>(i - 1)] = num_colours - i + 1;
            break;
        case HeuristicKind::shift:
            for (int i = 1; i <= num_colours; ++i)
                image[static_cast<std::size_t>(i - 1)] = i == num_colours ? 1 : i + 1;
            break;
        case HeuristicKind::zigzag:
            for (int i = 1; i <= num_colours; ++i)
                image[static_cast<std::size_t>(i - 1)] =
                    i % 2 == 1 ? num_colours - (i - 1) / 2 : i / 2;
            break;
    }
    return PermutationMap(std::move(image));
}

}  // namespace chroma
