#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cooc {

using NodeId = std::uint32_t;
using Weight = std::uint64_t;

/// Weighted directed graph over interned words.
///
/// Node ids are assigned densely in first-insertion order. Every stored link
/// has weight >= 1 and there are no self-loops. Links keep their creation
/// order, which makes serialization deterministic.
class WeightedDigraph {
 public:
  struct Link {
    NodeId source;
    NodeId target;
    Weight weight;
  };

  /// Returns the id of `word`, inserting it if needed.
  NodeId intern(std::string_view word);
  std::optional<NodeId> find(std::string_view word) const;

  /// Increments w(source, target) by one. Both nodes are inserted if absent.
  /// A self-loop is not stored; returns false in that case.
  bool add_cooccurrence(std::string_view source, std::string_view target);
  bool add_cooccurrence(NodeId source, NodeId target) { return add_weight(source, target, 1); }

  /// Adds `amount` (>= 1) to w(source, target). Self-loops are rejected with false.
  bool add_weight(NodeId source, NodeId target, Weight amount);

  /// 0 when the link is absent.
  Weight weight(NodeId source, NodeId target) const;

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(NodeId id) const { return names_.at(id); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const Link> links() const noexcept { return links_; }

  /// Indices into links() of the outgoing links of `id`, in creation order.
  std::span<const std::uint32_t> out_links(NodeId id) const { return out_.at(id); }

 private:
  static std::uint64_t key(NodeId s, NodeId t) noexcept {
    return (static_cast<std::uint64_t>(s) << 32) | t;
  }

  struct NameHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId, NameHash, std::equal_to<>> ids_;
  std::vector<Link> links_;
  std::unordered_map<std::uint64_t, std::uint32_t> link_index_;
  std::vector<std::vector<std::uint32_t>> out_;
};

/// Frozen symmetric projection of a digraph in CSR form.
///
/// neighbor(i) = { j : (i,j) or (j,i) is a link } and the merged weight is
/// w'(i,j) = w(i,j) + w(j,i). Neighbor lists are sorted by node id.
class UndirectedView {
 public:
  UndirectedView() = default;
  explicit UndirectedView(const WeightedDigraph& graph);

  std::size_t node_count() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  /// Number of undirected edges.
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {neighbors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const Weight> weights(NodeId i) const {
    return {weights_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }

  /// 0 when i and j are not adjacent.
  Weight merged_weight(NodeId i, NodeId j) const;
  /// Largest merged weight, 0 for an edgeless view.
  Weight max_weight() const noexcept { return max_weight_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<Weight> weights_;
  Weight max_weight_ = 0;
};

/// Weakly connected components. Component ids are ordered by the smallest
/// node id they contain; the largest component is the first one of maximal
/// size in that order.
struct ComponentPartition {
  std::vector<std::uint32_t> assignment;
  std::vector<std::size_t> sizes;
  std::size_t omega = 0;
  std::uint32_t largest_id = 0;
  std::vector<NodeId> largest_component;  // ascending ids; empty for an empty graph
};

ComponentPartition weak_components(const UndirectedView& view);
ComponentPartition weak_components(const WeightedDigraph& graph);

/// Maximum merged undirected weight. Throws GraphError("no links") when K = 0.
Weight max_weight(const WeightedDigraph& graph);

}  // namespace cooc
