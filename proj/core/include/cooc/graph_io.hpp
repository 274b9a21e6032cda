#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "cooc/graph.hpp"

namespace cooc {

/// Writes `source<TAB>target<TAB>weight` lines in link-creation order.
void write_edge_list(const WeightedDigraph& graph, std::ostream& out);

/// Parses an edge list. When `node_order` is non-empty, those words are
/// interned first (in order) so isolated nodes and node ids survive a round
/// trip. Throws GraphError naming the offending line.
WeightedDigraph read_edge_list(std::istream& in, std::span<const std::string> node_order = {});

/// {N, K, omega, nodes}; `nodes` lists every word in id order.
nlohmann::ordered_json network_sidecar(const WeightedDigraph& graph);

/// Path of the JSON sidecar that accompanies an edge-list file.
std::filesystem::path sidecar_path(const std::filesystem::path& edges_path);

/// Writes the edge list and its sidecar next to it.
void save_network(const WeightedDigraph& graph, const std::filesystem::path& edges_path);

/// Loads an edge list, using the sidecar when present and checking N and K
/// against it.
WeightedDigraph load_network(const std::filesystem::path& edges_path);

}  // namespace cooc
