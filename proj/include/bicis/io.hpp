#pragma once

#include <iosfwd>
#include <string>

#include "bicis/graph.hpp"

namespace bicis {

// Edge file: UTF-8 text; lines starting with '%' are comments; data lines are
// "<u> <v> [ignored...]" with 1-based layer ids, whitespace-separated.
// Weight file: lines "U <id> <w>" or "V <id> <w>", w >= 0; '%' comments
// allowed. Layer sizes are the maximum ids seen across both inputs; vertices
// without a weight line default to weight 1.
BipartiteGraph load_graph(std::istream& edge_source, std::istream* weight_source = nullptr);

BipartiteGraph load_graph_files(const std::string& edge_path,
                                const std::string& weight_path = "");

// Writers emit the exact formats accepted above: edges sorted ascending, one
// "U ..." line per upper vertex then one "V ..." line per lower vertex.
void write_graph(const BipartiteGraph& graph, std::ostream& edge_sink,
                 std::ostream& weight_sink);

void write_graph_files(const BipartiteGraph& graph, const std::string& edge_path,
                       const std::string& weight_path);

}  // namespace bicis
