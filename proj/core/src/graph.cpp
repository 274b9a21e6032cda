#include "cooc/graph.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "cooc/error.hpp"

namespace cooc {

NodeId WeightedDigraph::intern(std::string_view word) {
  if (auto it = ids_.find(word); it != ids_.end()) return it->second;
  if (names_.size() >= std::numeric_limits<NodeId>::max()) {
    throw GraphError("node capacity exceeded");
  }
  const auto id = static_cast<NodeId>(names_.size());
  names_.emplace_back(word);
  ids_.emplace(names_.back(), id);
  out_.emplace_back();
  return id;
}

std::optional<NodeId> WeightedDigraph::find(std::string_view word) const {
  if (auto it = ids_.find(word); it != ids_.end()) return it->second;
  return std::nullopt;
}

bool WeightedDigraph::add_cooccurrence(std::string_view source, std::string_view target) {
  const NodeId s = intern(source);
  const NodeId t = intern(target);
  return add_cooccurrence(s, t);
}

bool WeightedDigraph::add_weight(NodeId source, NodeId target, Weight amount) {
  if (source >= names_.size() || target >= names_.size()) {
    throw GraphError("add_weight: unknown node id");
  }
  if (amount == 0) throw GraphError("add_weight: weight must be positive");
  if (source == target) return false;
  const auto [it, inserted] =
      link_index_.try_emplace(key(source, target), static_cast<std::uint32_t>(links_.size()));
  if (inserted) {
    links_.push_back({source, target, amount});
    out_[source].push_back(it->second);
  } else {
    links_[it->second].weight += amount;
  }
  return true;
}

Weight WeightedDigraph::weight(NodeId source, NodeId target) const {
  const auto it = link_index_.find(key(source, target));
  return it == link_index_.end() ? 0 : links_[it->second].weight;
}

UndirectedView::UndirectedView(const WeightedDigraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::tuple<NodeId, NodeId, Weight>> pairs;
  pairs.reserve(graph.link_count());
  for (const auto& link : graph.links()) {
    pairs.emplace_back(std::min(link.source, link.target), std::max(link.source, link.target),
                       link.weight);
  }
  std::sort(pairs.begin(), pairs.end());

  // Merge (i,j) with (j,i).
  std::size_t out = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (out > 0 && std::get<0>(pairs[out - 1]) == std::get<0>(pairs[i]) &&
        std::get<1>(pairs[out - 1]) == std::get<1>(pairs[i])) {
      std::get<2>(pairs[out - 1]) += std::get<2>(pairs[i]);
    } else {
      pairs[out++] = pairs[i];
    }
  }
  pairs.resize(out);

  offsets_.assign(n + 1, 0);
  for (const auto& [a, b, w] : pairs) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
    max_weight_ = std::max(max_weight_, w);
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

  neighbors_.resize(offsets_[n]);
  weights_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Pairs are sorted by (low, high), so each list is filled in ascending order.
  for (const auto& [a, b, w] : pairs) {
    neighbors_[cursor[a]] = b;
    weights_[cursor[a]++] = w;
    neighbors_[cursor[b]] = a;
    weights_[cursor[b]++] = w;
  }
}

Weight UndirectedView::merged_weight(NodeId i, NodeId j) const {
  const auto nbrs = neighbors(i);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
  if (it == nbrs.end() || *it != j) return 0;
  return weights(i)[static_cast<std::size_t>(it - nbrs.begin())];
}

ComponentPartition weak_components(const UndirectedView& view) {
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = view.node_count();
  ComponentPartition part;
  part.assignment.assign(n, kUnassigned);

  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId start = 0; start < n; ++start) {
    if (part.assignment[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(part.sizes.size());
    queue.clear();
    queue.push_back(start);
    part.assignment[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const NodeId next : view.neighbors(queue[head])) {
        if (part.assignment[next] == kUnassigned) {
          part.assignment[next] = id;
          queue.push_back(next);
        }
      }
    }
    part.sizes.push_back(queue.size());
    if (queue.size() > part.sizes[part.largest_id]) part.largest_id = id;
  }
  part.omega = part.sizes.size();
  if (part.omega > 0) {
    part.largest_component.reserve(part.sizes[part.largest_id]);
    for (NodeId i = 0; i < n; ++i) {
      if (part.assignment[i] == part.largest_id) part.largest_component.push_back(i);
    }
  }
  return part;
}

ComponentPartition weak_components(const WeightedDigraph& graph) {
  return weak_components(UndirectedView(graph));
}

Weight max_weight(const WeightedDigraph& graph) {
  if (graph.link_count() == 0) throw GraphError("no links");
  return UndirectedView(graph).max_weight();
}

}  // namespace cooc
