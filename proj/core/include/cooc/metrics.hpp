#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cooc/graph.hpp"
#include "cooc/net_build.hpp"

namespace cooc {

inline constexpr std::int32_t kUnreachable = -1;

/// Hop counts from `source`; unreachable nodes hold kUnreachable.
/// Throws GraphError for an unknown source.
std::vector<std::int32_t> bfs_distances(const UndirectedView& view, NodeId source);

struct DistanceMode {
  bool exact = true;
  std::size_t sources = 0;
  std::uint64_t seed = 0;

  static DistanceMode all_pairs() { return {}; }
  static DistanceMode sampled(std::size_t sources, std::uint64_t seed) {
    return {false, sources, seed};
  }
};

struct NodeDistance {
  NodeId node;
  double average;  // mean hop distance to the rest of the component
};

/// Hop-distance statistics restricted to the largest weak component.
struct DistanceStats {
  double average_path_length = 0.0;  // L, mean over ordered pairs i != j
  std::uint32_t diameter = 0;        // D; a lower bound when !exact
  std::vector<NodeDistance> per_node_average;  // one entry per BFS root, ascending ids
  std::uint64_t pair_count = 0;
  bool exact = true;
  std::size_t sampled_sources = 0;
  std::uint64_t seed = 0;
  std::size_t component_size = 0;
};

/// In sampled mode `mode.sources` roots are drawn uniformly without
/// replacement from the largest component using `mode.seed`; asking for at
/// least as many roots as the component holds uses all of them. Results do
/// not depend on the thread count. Throws GraphError("degenerate graph")
/// when the largest component has fewer than two nodes.
DistanceStats distance_stats(const UndirectedView& view, const ComponentPartition& components,
                             const DistanceMode& mode, unsigned threads = 0);
DistanceStats distance_stats(const UndirectedView& view, const DistanceMode& mode,
                             unsigned threads = 0);

/// Weighted clustering of node i as the geometric mean of triangle weights,
/// with weights divided by `max_weight`:
///   c_i = 1/(k_i(k_i-1)) * sum over ordered neighbor pairs (j,k) that are
///         adjacent of (w_ij w_ik w_jk)^(1/3)
/// and c_i = 0 when k_i < 2.
double node_clustering(const UndirectedView& view, NodeId i, double max_weight);

/// c_i for every node, normalized by the view's maximum weight.
std::vector<double> clustering_coefficients(const UndirectedView& view, unsigned threads = 0);

struct ClusteringStats {
  double average = 0.0;              // C
  std::vector<double> per_node;      // c_i indexed by node id, all nodes
  std::uint32_t component_used = 0;  // the component C averages over
  std::size_t nodes_averaged = 0;
};

/// Averages c_i over the largest component (the whole graph when omega = 1).
/// Throws GraphError for an empty graph.
ClusteringStats average_clustering(const UndirectedView& view,
                                   const ComponentPartition& components, unsigned threads = 0);
ClusteringStats average_clustering(const WeightedDigraph& graph, unsigned threads = 0);

struct HubEntry {
  std::string word;
  std::size_t degree = 0;  // distinct neighbors in the undirected projection
};

/// Top-k nodes by degree, ties in lexicographic word order. Returns all N
/// nodes when k > N. Throws ConfigError when k == 0.
std::vector<HubEntry> top_hubs(const WeightedDigraph& graph, const UndirectedView& view,
                               std::size_t k);
std::vector<HubEntry> top_hubs(const WeightedDigraph& graph, std::size_t k);

struct MetricsOptions {
  bool force_exact = false;
  std::optional<std::size_t> sample_sources;  // forces sampling when set
  std::size_t exact_threshold = 20000;        // largest-component size
  std::size_t default_samples = 1000;
  std::uint64_t seed = 1;
  std::size_t hub_count = 10;
  unsigned threads = 0;
};

DistanceMode choose_distance_mode(std::size_t component_size, const MetricsOptions& options);

struct NetworkMetrics {
  NetworkSummary summary;
  DistanceStats distances;
  ClusteringStats clustering;
  std::vector<HubEntry> hubs;
};

NetworkMetrics compute_metrics(const WeightedDigraph& graph, const MetricsOptions& options = {});
NetworkMetrics compute_metrics(const WeightedDigraph& graph, const UndirectedView& view,
                               const ComponentPartition& components,
                               const MetricsOptions& options = {});

}  // namespace cooc
