#include "cooc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cooc/error.hpp"
#include "parallel.hpp"

namespace cooc {
namespace {

// Triangle terms are summed in 2^-52 fixed point so the per-node totals do
// not depend on which worker found which triangle.
__extension__ using FixedSum = unsigned __int128;
constexpr int kFixedBits = 52;

std::uint64_t to_fixed(double term) {
  return static_cast<std::uint64_t>(std::llround(std::ldexp(term, kFixedBits)));
}

double from_fixed(FixedSum value) {
  return std::ldexp(static_cast<double>(value), -kFixedBits);
}

/// Uniform draw in [0, bound) by rejection; std::uniform_int_distribution is
/// implementation-defined and would make sampled runs platform-dependent.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t range = std::mt19937_64::max();
  const std::uint64_t limit = range - (range % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

std::vector<NodeId> pick_roots(const std::vector<NodeId>& component, const DistanceMode& mode) {
  if (mode.exact || mode.sources >= component.size()) return component;
  std::vector<NodeId> pool = component;
  std::mt19937_64 rng(mode.seed);
  for (std::size_t i = 0; i < mode.sources; ++i) {
    const auto j = i + static_cast<std::size_t>(bounded_draw(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(mode.sources);
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct BfsScratch {
  std::vector<std::int32_t> dist;
  std::vector<NodeId> queue;
};

struct RowResult {
  std::uint64_t sum = 0;
  std::uint32_t max = 0;
  std::size_t reached = 0;
};

RowResult bfs_row(const UndirectedView& view, NodeId root, BfsScratch& scratch) {
  auto& dist = scratch.dist;
  auto& queue = scratch.queue;
  queue.clear();
  queue.push_back(root);
  dist[root] = 0;
  RowResult row;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::int32_t next = dist[u] + 1;
    for (const NodeId v : view.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = next;
        queue.push_back(v);
        row.sum += static_cast<std::uint64_t>(next);
        row.max = static_cast<std::uint32_t>(next);
      }
    }
  }
  row.reached = queue.size() - 1;
  for (const NodeId u : queue) dist[u] = kUnreachable;
  return row;
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const UndirectedView& view, NodeId source) {
  if (source >= view.node_count()) throw GraphError("bfs_distances: unknown source node");
  std::vector<std::int32_t> dist(view.node_count(), kUnreachable);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (const NodeId v : view.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceStats distance_stats(const UndirectedView& view, const ComponentPartition& components,
                             const DistanceMode& mode, unsigned threads) {
  const auto& component = components.largest_component;
  if (component.size() < 2) throw GraphError("degenerate graph");
  if (!mode.exact && mode.sources == 0) throw ConfigError("sampled mode needs at least one source");

  const std::vector<NodeId> roots = pick_roots(component, mode);
  std::vector<RowResult> rows(roots.size());

  const unsigned workers = detail::resolve_threads(threads, roots.size());
  std::vector<BfsScratch> scratch(workers);
  for (auto& s : scratch) s.dist.assign(view.node_count(), kUnreachable);
  detail::parallel_for(roots.size(), workers, [&](std::size_t r, unsigned worker) {
    rows[r] = bfs_row(view, roots[r], scratch[worker]);
  });

  const auto others = static_cast<double>(component.size() - 1);
  DistanceStats stats;
  stats.exact = mode.exact;
  stats.sampled_sources = mode.exact ? 0 : roots.size();
  stats.seed = mode.exact ? 0 : mode.seed;
  stats.component_size = component.size();
  stats.per_node_average.reserve(roots.size());
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    total += rows[r].sum;
    stats.pair_count += rows[r].reached;
    stats.diameter = std::max(stats.diameter, rows[r].max);
    stats.per_node_average.push_back({roots[r], static_cast<double>(rows[r].sum) / others});
  }
  stats.average_path_length = static_cast<double>(total) / static_cast<double>(stats.pair_count);
  return stats;
}

DistanceStats distance_stats(const UndirectedView& view, const DistanceMode& mode,
                             unsigned threads) {
  return distance_stats(view, weak_components(view), mode, threads);
}

double node_clustering(const UndirectedView& view, NodeId i, double max_weight) {
  if (i >= view.node_count()) throw GraphError("node_clustering: unknown node");
  const std::size_t k = view.degree(i);
  if (k < 2) return 0.0;
  if (!(max_weight > 0.0)) throw GraphError("node_clustering: max weight must be positive");

  const auto nbrs = view.neighbors(i);
  const auto wts = view.weights(i);
  double sum = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    const NodeId j = nbrs[a];
    const double w_ij = static_cast<double>(wts[a]) / max_weight;
    const auto j_nbrs = view.neighbors(j);
    const auto j_wts = view.weights(j);
    // Walk both sorted lists; only partners x > j so each pair is seen once.
    std::size_t p = a + 1;
    std::size_t q = static_cast<std::size_t>(
        std::upper_bound(j_nbrs.begin(), j_nbrs.end(), j) - j_nbrs.begin());
    while (p < k && q < j_nbrs.size()) {
      if (nbrs[p] < j_nbrs[q]) {
        ++p;
      } else if (j_nbrs[q] < nbrs[p]) {
        ++q;
      } else {
        const double w_ix = static_cast<double>(wts[p]) / max_weight;
        const double w_jx = static_cast<double>(j_wts[q]) / max_weight;
        sum += std::cbrt(w_ij * w_ix * w_jx);
        ++p;
        ++q;
      }
    }
  }
  return 2.0 * sum / (static_cast<double>(k) * static_cast<double>(k - 1));
}

std::vector<double> clustering_coefficients(const UndirectedView& view, unsigned threads) {
  const std::size_t n = view.node_count();
  std::vector<double> result(n, 0.0);
  const double max_w = static_cast<double>(view.max_weight());
  if (n == 0 || max_w == 0.0) return result;

  // Orient every edge toward the endpoint of higher (degree, id) rank; each
  // triangle is then found exactly once from its lowest-ranked corner.
  std::vector<std::size_t> rank(n);
  {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      const auto da = view.degree(a), db = view.degree(b);
      return da != db ? da < db : a < b;
    });
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  }
  std::vector<std::size_t> fwd_offsets(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (const NodeId v : view.neighbors(u)) {
      if (rank[v] > rank[u]) ++fwd_offsets[u + 1];
    }
  }
  for (std::size_t u = 0; u < n; ++u) fwd_offsets[u + 1] += fwd_offsets[u];
  std::vector<NodeId> fwd(fwd_offsets[n]);
  std::vector<double> fwd_w(fwd_offsets[n]);
  for (NodeId u = 0; u < n; ++u) {
    std::size_t at = fwd_offsets[u];
    const auto nbrs = view.neighbors(u);
    const auto wts = view.weights(u);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      if (rank[nbrs[a]] > rank[u]) {
        fwd[at] = nbrs[a];
        fwd_w[at++] = static_cast<double>(wts[a]) / max_w;
      }
    }
  }

  const unsigned workers = detail::resolve_threads(threads, n);
  std::vector<std::vector<FixedSum>> acc(workers, std::vector<FixedSum>(n, 0));
  detail::parallel_for(n, workers, [&](std::size_t u, unsigned worker) {
    auto& sums = acc[worker];
    const std::size_t ub = fwd_offsets[u], ue = fwd_offsets[u + 1];
    for (std::size_t e = ub; e < ue; ++e) {
      const NodeId v = fwd[e];
      const double w_uv = fwd_w[e];
      std::size_t p = ub;
      std::size_t q = fwd_offsets[v];
      const std::size_t ve = fwd_offsets[v + 1];
      while (p < ue && q < ve) {
        if (fwd[p] < fwd[q]) {
          ++p;
        } else if (fwd[q] < fwd[p]) {
          ++q;
        } else {
          const auto term = to_fixed(std::cbrt(w_uv * fwd_w[p] * fwd_w[q]));
          sums[u] += term;
          sums[v] += term;
          sums[fwd[p]] += term;
          ++p;
          ++q;
        }
      }
    }
  });

  for (NodeId i = 0; i < n; ++i) {
    const std::size_t k = view.degree(i);
    if (k < 2) continue;
    FixedSum total = 0;
    for (const auto& sums : acc) total += sums[i];
    result[i] = 2.0 * from_fixed(total) / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return result;
}

ClusteringStats average_clustering(const UndirectedView& view,
                                   const ComponentPartition& components, unsigned threads) {
  if (view.node_count() == 0) throw GraphError("average_clustering: empty graph");
  ClusteringStats stats;
  stats.per_node = clustering_coefficients(view, threads);
  stats.component_used = components.largest_id;
  stats.nodes_averaged = components.largest_component.size();
  double sum = 0.0;
  for (const NodeId i : components.largest_component) sum += stats.per_node[i];
  stats.average = sum / static_cast<double>(stats.nodes_averaged);
  return stats;
}

ClusteringStats average_clustering(const WeightedDigraph& graph, unsigned threads) {
  const UndirectedView view(graph);
  return average_clustering(view, weak_components(view), threads);
}

std::vector<HubEntry> top_hubs(const WeightedDigraph& graph, const UndirectedView& view,
                               std::size_t k) {
  if (k == 0) throw ConfigError("top_hubs: k must be >= 1");
  const std::size_t n = view.node_count();
  k = std::min(k, n);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](NodeId a, NodeId b) {
                      const auto da = view.degree(a), db = view.degree(b);
                      return da != db ? da > db : graph.name(a) < graph.name(b);
                    });
  std::vector<HubEntry> hubs;
  hubs.reserve(k);
  for (std::size_t r = 0; r < k; ++r) hubs.push_back({graph.name(order[r]), view.degree(order[r])});
  return hubs;
}

std::vector<HubEntry> top_hubs(const WeightedDigraph& graph, std::size_t k) {
  return top_hubs(graph, UndirectedView(graph), k);
}

DistanceMode choose_distance_mode(std::size_t component_size, const MetricsOptions& options) {
  if (options.force_exact) return DistanceMode::all_pairs();
  if (options.sample_sources) return DistanceMode::sampled(*options.sample_sources, options.seed);
  if (component_size > options.exact_threshold) {
    return DistanceMode::sampled(options.default_samples, options.seed);
  }
  return DistanceMode::all_pairs();
}

NetworkMetrics compute_metrics(const WeightedDigraph& graph, const UndirectedView& view,
                               const ComponentPartition& components,
                               const MetricsOptions& options) {
  NetworkMetrics m;
  m.summary = {graph.node_count(), graph.link_count(), components.omega};
  m.distances = distance_stats(
      view, components, choose_distance_mode(components.largest_component.size(), options),
      options.threads);
  m.clustering = average_clustering(view, components, options.threads);
  m.hubs = top_hubs(graph, view, options.hub_count);
  return m;
}

NetworkMetrics compute_metrics(const WeightedDigraph& graph, const MetricsOptions& options) {
  const UndirectedView view(graph);
  return compute_metrics(graph, view, weak_components(view), options);
}

}  // namespace cooc
