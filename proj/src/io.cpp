#include "chroma/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chroma {

namespace {

VertexLabel parse_label(std::string_view token) {
    // "v_<i>_<j>"
    if (token.size() < 5 || token.substr(0, 2) != "v_")
        throw std::invalid_argument("invalid vertex id: " + std::string(token));
    std::size_t sep = token.find('_', 2);
    if (sep == std::string_view::npos || sep + 1 >= token.size())
        throw std::invalid_argument("invalid vertex id: " + std::string(token));
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string_view i_part = token.substr(2, sep - 2);
    std::string_view j_part = token.substr(sep + 1);
    if (!digits(i_part) || !digits(j_part))
        throw std::invalid_argument("invalid vertex id: " + std::string(token));
    return VertexLabel{std::stoi(std::string(i_part)), std::stoi(std::string(j_part))};
}

ColourCluster cluster_from_colouring(const Colouring& colouring) {
    int max_colour = 0;
    for (const auto& [vertex, colour] : colouring) max_colour = std::max(max_colour, colour);
    if (max_colour == 0) throw std::invalid_argument("empty cluster");
    std::vector<int> sizes(static_cast<std::size_t>(max_colour), 0);
    for (const auto& [vertex, colour] : colouring) ++sizes[static_cast<std::size_t>(colour - 1)];
    return ColourCluster(std::move(sizes));  // rejects any gap in the colour range
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string to_dot(const ColouredGraph& cg) {
    std::ostringstream out;
    out << "graph chroma {\n";
    for (const auto& v : cg.graph.vertices()) {
        std::string id = to_string(v);
        out << "  " << id << " [label=\"" << id << "\", colour=" << cg.colour_of(v) << "];\n";
    }
    for (const auto& e : cg.graph.edges())
        out << "  " << to_string(e.first) << " -- " << to_string(e.second) << ";\n";
    out << "}\n";
    return out.str();
}

ColouredGraph coloured_graph_from_dot(std::string_view text) {
    std::vector<VertexLabel> vertices;
    std::vector<EdgeLabel> edges;
    Colouring colouring;

    std::istringstream in{std::string(text)};
    std::string raw;
    bool in_graph = false;
    while (std::getline(in, raw)) {
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (!in_graph) {
            if (line.substr(0, 5) != "graph" || line.back() != '{')
                throw std::invalid_argument("not a DOT graph");
            in_graph = true;
            continue;
        }
        if (line == "}") break;
        if (line.back() != ';') throw std::invalid_argument("malformed DOT line: " + raw);
        line.remove_suffix(1);
        line = trim(line);

        std::size_t dash = line.find(" -- ");
        if (dash != std::string_view::npos) {
            VertexLabel a = parse_label(trim(line.substr(0, dash)));
            VertexLabel b = parse_label(trim(line.substr(dash + 4)));
            edges.push_back({a, b});
            continue;
        }
        std::size_t bracket = line.find('[');
        if (bracket == std::string_view::npos)
            throw std::invalid_argument("malformed DOT line: " + raw);
        VertexLabel v = parse_label(trim(line.substr(0, bracket)));
        std::string_view attrs = line.substr(bracket);
        std::size_t colour_at = attrs.find("colour=");
        if (colour_at == std::string_view::npos)
            throw std::invalid_argument("missing colour attribute: " + raw);
        std::size_t digits_at = colour_at + 7;
        std::size_t digits_end = digits_at;
        while (digits_end < attrs.size() &&
               std::isdigit(static_cast<unsigned char>(attrs[digits_end])))
            ++digits_end;
        if (digits_end == digits_at)
            throw std::invalid_argument("missing colour attribute: " + raw);
        int colour = std::stoi(std::string(attrs.substr(digits_at, digits_end - digits_at)));
        vertices.push_back(v);
        colouring.emplace(v, colour);
    }
    if (!in_graph) throw std::invalid_argument("not a DOT graph");

    ColourCluster cluster = cluster_from_colouring(colouring);
    return ColouredGraph::make(Graph::from(std::move(vertices), std::move(edges)),
                               std::move(colouring), std::move(cluster));
}

nlohmann::ordered_json coloured_graph_to_json(const ColouredGraph& cg) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["cluster"] = cg.cluster.sizes();

    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& v : cg.graph.vertices())
        verts.push_back({{"class", v.class_index}, {"ordinal", v.ordinal}});
    j["vertices"] = std::move(verts);

    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : cg.graph.edges())
        edges.push_back({to_string(e.first), to_string(e.second)});
    j["edges"] = std::move(edges);

    nlohmann::ordered_json colours = nlohmann::ordered_json::object();
    for (const auto& v : cg.graph.vertices()) colours[to_string(v)] = cg.colour_of(v);
    j["colouring"] = std::move(colours);
    return j;
}

ColouredGraph coloured_graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cluster") || !j.contains("vertices") ||
        !j.contains("edges") || !j.contains("colouring"))
        throw std::invalid_argument("malformed graph JSON");

    std::vector<int> sizes;
    for (const auto& r : j["cluster"]) sizes.push_back(r.get<int>());
    ColourCluster cluster(std::move(sizes));

    std::vector<VertexLabel> vertices;
    for (const auto& v : j["vertices"])
        vertices.push_back(VertexLabel{v.at("class").get<int>(), v.at("ordinal").get<int>()});

    std::vector<EdgeLabel> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("malformed graph JSON");
        edges.push_back({parse_label(e[0].get<std::string>()), parse_label(e[1].get<std::string>())});
    }

    Colouring colouring;
    for (const auto& [key, value] : j["colouring"].items())
        colouring.emplace(parse_label(key), value.get<int>());

    return ColouredGraph::make(Graph::from(std::move(vertices), std::move(edges)),
                               std::move(colouring), std::move(cluster));
}

}  // namespace chroma
