#include "cooc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <string_view>
#include <vector>

#include "cooc/error.hpp"

namespace cooc {
namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw GraphError("edge list line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

void write_edge_list(const WeightedDigraph& graph, std::ostream& out) {
  for (const auto& link : graph.links()) {
    out << graph.name(link.source) << '\t' << graph.name(link.target) << '\t' << link.weight
        << '\n';
  }
}

WeightedDigraph read_edge_list(std::istream& in, std::span<const std::string> node_order) {
  WeightedDigraph graph;
  for (const auto& word : node_order) {
    if (graph.find(word)) throw GraphError("duplicate node in node order: " + word);
    graph.intern(word);
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
      bad_line(line_no, "expected 3 tab-separated fields");
    }
    const std::string_view view(line);
    const auto source = view.substr(0, tab1);
    const auto target = view.substr(tab1 + 1, tab2 - tab1 - 1);
    const auto weight_text = view.substr(tab2 + 1);
    if (source.empty() || target.empty()) bad_line(line_no, "empty word");

    Weight weight = 0;
    const auto [ptr, ec] =
        std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
    if (ec != std::errc{} || ptr != weight_text.data() + weight_text.size() || weight == 0) {
      bad_line(line_no, "weight must be a positive integer");
    }
    const NodeId s = graph.intern(source);
    const NodeId t = graph.intern(target);
    if (s == t) bad_line(line_no, "self-loop");
    if (graph.weight(s, t) != 0) bad_line(line_no, "duplicate link");
    graph.add_weight(s, t, weight);
  }
  return graph;
}

nlohmann::ordered_json network_sidecar(const WeightedDigraph& graph) {
  nlohmann::ordered_json j;
  j["N"] = graph.node_count();
  j["K"] = graph.link_count();
  j["omega"] = weak_components(graph).omega;
  j["nodes"] = std::vector<std::string>(graph.names().begin(), graph.names().end());
  return j;
}

std::filesystem::path sidecar_path(const std::filesystem::path& edges_path) {
  auto p = edges_path;
  p.replace_extension(".json");
  return p;
}

void save_network(const WeightedDigraph& graph, const std::filesystem::path& edges_path) {
  std::ofstream edges(edges_path, std::ios::binary);
  if (!edges) throw IoError("cannot write " + edges_path.string());
  write_edge_list(graph, edges);

  std::ofstream side(sidecar_path(edges_path), std::ios::binary);
  if (!side) throw IoError("cannot write " + sidecar_path(edges_path).string());
  side << network_sidecar(graph).dump(2) << '\n';
  if (!edges || !side) throw IoError("failed writing " + edges_path.string());
}

WeightedDigraph load_network(const std::filesystem::path& edges_path) {
  std::ifstream edges(edges_path, std::ios::binary);
  if (!edges) throw IoError("cannot open " + edges_path.string());

  const auto side_path = sidecar_path(edges_path);
  if (!std::filesystem::exists(side_path)) return read_edge_list(edges);

  std::ifstream side(side_path, std::ios::binary);
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(side);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(side_path.string() + ": " + e.what());
  }
  std::vector<std::string> nodes;
  if (meta.contains("nodes")) nodes = meta.at("nodes").get<std::vector<std::string>>();
  auto graph = read_edge_list(edges, nodes);
  if (meta.value("N", graph.node_count()) != graph.node_count() ||
      meta.value("K", graph.link_count()) != graph.link_count()) {
    throw GraphError(edges_path.string() + ": N/K disagree with sidecar");
  }
  return graph;
}

}  // namespace cooc
