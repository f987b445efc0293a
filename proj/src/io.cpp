#include "bicis/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bicis/errors.hpp"

namespace bicis {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer " + what +
                     ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

BipartiteGraph load_graph(std::istream& edge_source, std::istream* weight_source) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t max_u = 0;
  std::uint32_t max_v = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(edge_source, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0][0] == '%') continue;
    if (fields.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
    }
    std::int64_t u = parse_int(fields[0], line_no, "upper id");
    std::int64_t v = parse_int(fields[1], line_no, "lower id");
    if (u <= 0 || v <= 0) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex ids are 1-based");
    }
    max_u = std::max(max_u, static_cast<std::uint32_t>(u));
    max_v = std::max(max_v, static_cast<std::uint32_t>(v));
    edges.emplace_back(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
  }

  std::vector<std::pair<std::uint32_t, Weight>> upper_w;
  std::vector<std::pair<std::uint32_t, Weight>> lower_w;
  if (weight_source != nullptr) {
    line_no = 0;
    while (std::getline(*weight_source, line)) {
      ++line_no;
      auto fields = split_fields(line);
      if (fields.empty() || fields[0][0] == '%') continue;
      if (fields.size() < 3 || (fields[0] != "U" && fields[0] != "V")) {
        throw ParseError("weight line " + std::to_string(line_no) +
                         ": expected 'U <id> <w>' or 'V <id> <w>'");
      }
      std::int64_t id = parse_int(fields[1], line_no, "vertex id");
      std::int64_t w = parse_int(fields[2], line_no, "weight");
      if (id <= 0) {
        throw ValidationError("weight line " + std::to_string(line_no) + ": vertex ids are 1-based");
      }
      if (w < 0) {
        throw ValidationError("weight line " + std::to_string(line_no) + ": negative weight");
      }
      if (fields[0] == "U") {
        max_u = std::max(max_u, static_cast<std::uint32_t>(id));
        upper_w.emplace_back(static_cast<std::uint32_t>(id - 1), static_cast<Weight>(w));
      } else {
        max_v = std::max(max_v, static_cast<std::uint32_t>(id));
        lower_w.emplace_back(static_cast<std::uint32_t>(id - 1), static_cast<Weight>(w));
      }
    }
  }

  std::vector<Weight> uw(max_u, 1);
  std::vector<Weight> lw(max_v, 1);
  for (const auto& [i, w] : upper_w) uw[i] = w;
  for (const auto& [i, w] : lower_w) lw[i] = w;
  return BipartiteGraph(max_u, max_v, std::move(edges), std::move(uw), std::move(lw));
}

BipartiteGraph load_graph_files(const std::string& edge_path, const std::string& weight_path) {
  std::ifstream edges(edge_path);
  if (!edges) throw IoError("cannot open edge file: " + edge_path);
  if (weight_path.empty()) return load_graph(edges);
  std::ifstream weights(weight_path);
  if (!weights) throw IoError("cannot open weight file: " + weight_path);
  return load_graph(edges, &weights);
}

void write_graph(const BipartiteGraph& graph, std::ostream& edge_sink,
                 std::ostream& weight_sink) {
  edge_sink << "% bipartite edge list: <upper id> <lower id>, 1-based\n";
  for (const auto& [u, v] : graph.edges()) {
    edge_sink << (u + 1) << ' ' << (v + 1) << '\n';
  }
  weight_sink << "% vertex weights: <layer> <id> <weight>\n";
  for (std::uint32_t i = 0; i < graph.upper_count(); ++i) {
    weight_sink << "U " << (i + 1) << ' ' << graph.weight(graph.upper_vertex(i)) << '\n';
  }
  for (std::uint32_t j = 0; j < graph.lower_count(); ++j) {
    weight_sink << "V " << (j + 1) << ' ' << graph.weight(graph.lower_vertex(j)) << '\n';
  }
}

void write_graph_files(const BipartiteGraph& graph, const std::string& edge_path,
                       const std::string& weight_path) {
  std::ofstream edges(edge_path);
  if (!edges) throw IoError("cannot write edge file: " + edge_path);
  std::ofstream weights(weight_path);
  if (!weights) throw IoError("cannot write weight file: " + weight_path);
  write_graph(graph, edges, weights);
  if (!edges.flush() || !weights.flush()) throw IoError("short write while emitting graph files");
}

}  // namespace bicis
