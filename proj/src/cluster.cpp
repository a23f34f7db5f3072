#include "chroma/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace chroma {

ColourCluster::ColourCluster(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("empty cluster");
    for (int r : sizes_)
        if (r < 1) throw std::invalid_argument("invalid class size");
}

long long ColourCluster::total() const {
    return std::accumulate(sizes_.begin(), sizes_.end(), 0ll);
}

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_class_size(std::string_view token) {
    token = trimmed(token);
    if (token.empty()) throw std::invalid_argument("invalid class size");
    long long value = 0;
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("invalid class size");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000'000ll) throw std::invalid_argument("invalid class size");
    }
    if (value < 1) throw std::invalid_argument("invalid class size");
    return static_cast<int>(value);
}

std::vector<int> sizes_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("invalid class size");
    std::vector<int> sizes;
    for (const auto& item : arr) {
        if (!item.is_number_integer()) throw std::invalid_argument("invalid class size");
        long long value = item.get<long long>();
        if (value < 1 || value > 1'000'000'000ll) throw std::invalid_argument("invalid class size");
        sizes.push_back(static_cast<int>(value));
    }
    return sizes;
}

}  // namespace

ColourCluster parse_cluster(std::string_view text) {
    std::string_view body = trimmed(text);
    if (body.empty()) throw std::invalid_argument("empty cluster");

    if (body.front() == '[' || body.front() == '{') {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error&) {
            throw std::invalid_argument("invalid class size");
        }
        if (parsed.is_object()) {
            if (!parsed.contains("classes")) throw std::invalid_argument("empty cluster");
            parsed = parsed["classes"];
        }
        auto sizes = sizes_from_json(parsed);
        if (sizes.empty()) throw std::invalid_argument("empty cluster");
        return ColourCluster(std::move(sizes));
    }

    std::vector<int> sizes;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view token =
            body.substr(start, comma == std::string_view::npos ? comma : comma - start);
        sizes.push_back(parse_class_size(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ColourCluster(std::move(sizes));
}

PermutationMap::PermutationMap(std::vector<int> image) : image_(std::move(image)) {
    const int l = static_cast<int>(image_.size());
    if (l == 0) throw std::invalid_argument("invalid permutation");
    std::vector<bool> seen(static_cast<std::size_t>(l), false);
    for (int target : image_) {
        if (target < 1 || target > l || seen[static_cast<std::size_t>(target - 1)])
            throw std::invalid_argument("invalid permutation");
        seen[static_cast<std::size_t>(target - 1)] = true;
    }
}

PermutationMap PermutationMap::identity(int num_colours) {
    std::vector<int> image(static_cast<std::size_t>(num_colours));
    std::iota(image.begin(), image.end(), 1);
    return PermutationMap(std::move(image));
}

PermutationMap PermutationMap::compose_after(const PermutationMap& first) const {
    if (num_colours() != first.num_colours()) throw std::invalid_argument("invalid permutation");
    std::vector<int> image(image_.size());
    for (int i = 1; i <= num_colours(); ++i)
        image[static_cast<std::size_t>(i - 1)] = apply(first.apply(i));
    return PermutationMap(std::move(image));
}

ColouredGraph ColouredGraph::make(Graph graph, Colouring colouring, ColourCluster cluster) {
    const int l = cluster.num_colours();
    std::vector<long long> weights(static_cast<std::size_t>(l), 0);
    for (const auto& v : graph.vertices()) {
        auto it = colouring.find(v);
        if (it == colouring.end()) throw std::invalid_argument("incomplete colouring");
        if (it->second < 1 || it->second > l)
            throw std::invalid_argument("colour outside cluster range");
        ++weights[static_cast<std::size_t>(it->second - 1)];
    }
    if (colouring.size() != graph.order())
        throw std::invalid_argument("colouring mentions unknown vertex");
    for (int i = 0; i < l; ++i)
        if (weights[static_cast<std::size_t>(i)] != cluster.sizes()[static_cast<std::size_t>(i)])
            throw std::invalid_argument("colour weights do not match cluster");
    return ColouredGraph{std::move(graph), std::move(colouring), std::move(cluster)};
}

int ColouredGraph::colour_of(const VertexLabel& v) const {
    auto it = colouring.find(v);
    if (it == colouring.end()) throw std::invalid_argument("incomplete colouring");
    return it->second;
}

std::pair<ColourCluster, PermutationMap> canonicalize(const ColourCluster& c) {
    const int l = c.num_colours();
    std::vector<int> order(static_cast<std::size_t>(l));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return c.sizes()[static_cast<std::size_t>(a)] > c.sizes()[static_cast<std::size_t>(b)];
    });

    std::vector<int> sorted_sizes(static_cast<std::size_t>(l));
    std::vector<int> image(static_cast<std::size_t>(l));
    for (int pos = 0; pos < l; ++pos) {
        int original = order[static_cast<std::size_t>(pos)];
        sorted_sizes[static_cast<std::size_t>(pos)] = c.sizes()[static_cast<std::size_t>(original)];
        image[static_cast<std::size_t>(original)] = pos + 1;
    }
    return {ColourCluster(std::move(sorted_sizes)), PermutationMap(std::move(image))};
}

ColouredGraph apply_colour_map(const ColouredGraph& cg, const PermutationMap& m) {
    if (m.num_colours() != cg.cluster.num_colours())
        throw std::invalid_argument("invalid permutation");

    Colouring recoloured;
    for (const auto& [vertex, colour] : cg.colouring)
        recoloured.emplace(vertex, m.apply(colour));

    std::vector<int> permuted_sizes(cg.cluster.sizes().size());
    for (int i = 1; i <= cg.cluster.num_colours(); ++i)
        permuted_sizes[static_cast<std::size_t>(m.apply(i) - 1)] = cg.cluster.size_of(i);

    return ColouredGraph::make(cg.graph, std::move(recoloured),
                               ColourCluster(std::move(permuted_sizes)));
}

}  // namespace chroma
