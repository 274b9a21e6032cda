#include "cooc/formats.hpp"

namespace cooc {

Json to_json(const CorpusStats& stats) {
  Json j;
  j["words"] = stats.word_count;
  j["unique_words"] = stats.unique_words;
  j["stopwords"] = stats.stopwords_present;
  return j;
}

Json to_json(const BuildDiagnostics& diagnostics) {
  Json j;
  j["sentences"] = diagnostics.sentences;
  j["tokens"] = diagnostics.tokens;
  j["self_loops_skipped"] = diagnostics.self_loops_skipped;
  j["n"] = diagnostics.window;
  j["include_stopwords"] = diagnostics.include_stopwords;
  return j;
}

Json to_json(const NetworkSummary& summary) {
  Json j;
  j["N"] = summary.nodes;
  j["K"] = summary.links;
  j["omega"] = summary.omega;
  return j;
}

Json to_json(const PowerLawFit& fit) {
  Json j;
  j["alpha"] = fit.alpha;
  j["x_min"] = fit.x_min;
  j["ks"] = fit.ks_statistic;
  j["n_tail"] = fit.n_tail;
  return j;
}

Json metrics_json(const NetworkMetrics& metrics) {
  Json j;
  j["N"] = metrics.summary.nodes;
  j["K"] = metrics.summary.links;
  j["L"] = metrics.distances.average_path_length;
  j["D"] = metrics.distances.diameter;
  j["C"] = metrics.clustering.average;
  j["omega"] = metrics.summary.omega;
  j["exact"] = metrics.distances.exact;
  j["sampled_sources"] = metrics.distances.sampled_sources;
  j["seed"] = metrics.distances.seed;
  return j;
}

void write_hubs_tsv(std::span<const HubEntry> hubs, std::ostream& out) {
  out << "rank\tword\tdegree\n";
  std::size_t rank = 0;
  for (const auto& hub : hubs) out << ++rank << '\t' << hub.word << '\t' << hub.degree << '\n';
}

}  // namespace cooc
