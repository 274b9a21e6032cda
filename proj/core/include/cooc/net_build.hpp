#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "cooc/graph.hpp"
#include "cooc/text_ingest.hpp"

namespace cooc {

/// One network build: window size n (>= 2) and the stopword policy.
struct WindowConfig {
  std::size_t window = 2;
  bool include_stopwords = true;
  StopwordList stopwords;  // consulted only when include_stopwords is false

  /// Throws ConfigError when window < 2.
  void validate() const;
};

struct BuildDiagnostics {
  std::size_t sentences = 0;  // sentences windowed, after any filtering
  std::size_t tokens = 0;
  std::uint64_t self_loops_skipped = 0;
  std::size_t window = 0;
  bool include_stopwords = true;
};

struct BuiltNetwork {
  WeightedDigraph graph;
  BuildDiagnostics diagnostics;
};

/// Incremental co-occurrence network builder.
///
/// For each sentence (t1..tL) and each position p, links run from t_p to
/// t_{p+1} .. t_{p+min(n-1, L-p)}. Windows stop at sentence boundaries.
/// Documents can be fed one at a time; copying a builder snapshots it, which
/// lets nested corpus parts reuse earlier work.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(WindowConfig config);

  /// Adds a document. Applies the stopword filter first when the policy
  /// excludes stopwords.
  void add_corpus(const Corpus& corpus);

  /// Adds one already-filtered sentence.
  void add_sentence(std::span<const Token> sentence);

  const WeightedDigraph& graph() const noexcept { return graph_; }
  const BuildDiagnostics& diagnostics() const noexcept { return diagnostics_; }
  const WindowConfig& config() const noexcept { return config_; }

  BuiltNetwork release() && { return {std::move(graph_), diagnostics_}; }

 private:
  WindowConfig config_;
  WeightedDigraph graph_;
  BuildDiagnostics diagnostics_;
  std::vector<NodeId> ids_;
};

/// Builds a network from an unfiltered corpus.
BuiltNetwork build_network(const Corpus& corpus, const WindowConfig& config);

struct NetworkSummary {
  std::size_t nodes = 0;  // N
  std::size_t links = 0;  // K
  std::size_t omega = 0;
};

NetworkSummary network_summary(const WeightedDigraph& graph);

/// Number of (first word, later word) window pairs a sentence of `length`
/// tokens produces, self-loops included.
std::uint64_t window_pair_count(std::size_t length, std::size_t window) noexcept;

}  // namespace cooc
