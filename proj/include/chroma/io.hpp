#ifndef CHROMA_IO_HPP
#define CHROMA_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "chroma/cluster.hpp"

namespace chroma {

// Undirected DOT with node ids "v_<i>_<j>" and a colour attribute:
//   graph chroma {
//     v_1_1 [label="v_1_1", colour=1];
//     v_1_1 -- v_2_1;
//   }
// Deterministic: vertices and edges in canonical order.
std::string to_dot(const ColouredGraph& cg);

// Parses exactly the shape emitted by to_dot; round-trips the graph and
// colouring. The cluster is recovered from the colour counts.
ColouredGraph coloured_graph_from_dot(std::string_view text);

// {"cluster":[...], "vertices":[{"class":i,"ordinal":j}], "edges":[[id,id]],
//  "colouring":{id: colour}} with ids "v_<i>_<j>".
nlohmann::ordered_json coloured_graph_to_json(const ColouredGraph& cg);
ColouredGraph coloured_graph_from_json(const nlohmann::json& j);

}  // namespace chroma

#endif
