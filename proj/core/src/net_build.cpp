#include "cooc/net_build.hpp"

#include <algorithm>
#include <utility>

#include "cooc/error.hpp"

namespace cooc {

void WindowConfig::validate() const {
  if (window < 2) {
    throw ConfigError("window size must be >= 2 (got " + std::to_string(window) + ")");
  }
}

NetworkBuilder::NetworkBuilder(WindowConfig config) : config_(std::move(config)) {
  config_.validate();
  diagnostics_.window = config_.window;
  diagnostics_.include_stopwords = config_.include_stopwords;
}

void NetworkBuilder::add_corpus(const Corpus& corpus) {
  if (config_.include_stopwords || config_.stopwords.empty()) {
    for (const auto& sentence : corpus.sentences) add_sentence(sentence);
    return;
  }
  for (const auto& sentence : filter_stopwords(corpus, config_.stopwords).sentences) {
    add_sentence(sentence);
  }
}

void NetworkBuilder::add_sentence(std::span<const Token> sentence) {
  if (sentence.empty()) return;
  ++diagnostics_.sentences;
  diagnostics_.tokens += sentence.size();

  // Intern in token order so node ids follow first appearance.
  ids_.clear();
  for (const auto& token : sentence) ids_.push_back(graph_.intern(token.normalized));

  const std::size_t length = ids_.size();
  for (std::size_t p = 0; p < length; ++p) {
    const std::size_t last = std::min(length - 1, p + config_.window - 1);
    for (std::size_t q = p + 1; q <= last; ++q) {
      if (!graph_.add_cooccurrence(ids_[p], ids_[q])) ++diagnostics_.self_loops_skipped;
    }
  }
}

BuiltNetwork build_network(const Corpus& corpus, const WindowConfig& config) {
  NetworkBuilder builder(config);
  builder.add_corpus(corpus);
  return std::move(builder).release();
}

NetworkSummary network_summary(const WeightedDigraph& graph) {
  return {graph.node_count(), graph.link_count(), weak_components(graph).omega};
}

std::uint64_t window_pair_count(std::size_t length, std::size_t window) noexcept {
  std::uint64_t total = 0;
  for (std::size_t p = 1; p <= length; ++p) total += std::min(window - 1, length - p);
  return total;
}

}  // namespace cooc
