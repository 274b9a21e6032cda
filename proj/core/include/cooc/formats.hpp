#pragma once

#include <ostream>
#include <span>

#include <nlohmann/json.hpp>

#include "cooc/degree_dist.hpp"
#include "cooc/metrics.hpp"
#include "cooc/net_build.hpp"
#include "cooc/text_ingest.hpp"

namespace cooc {

using Json = nlohmann::ordered_json;

/// {words, unique_words, stopwords}
Json to_json(const CorpusStats& stats);
/// {sentences, tokens, self_loops_skipped, n, include_stopwords}
Json to_json(const BuildDiagnostics& diagnostics);
/// {N, K, omega}
Json to_json(const NetworkSummary& summary);
/// {alpha, x_min, ks, n_tail}
Json to_json(const PowerLawFit& fit);
/// {N, K, L, D, C, omega, exact, sampled_sources, seed}
Json metrics_json(const NetworkMetrics& metrics);

/// `rank<TAB>word<TAB>degree`, ranks starting at 1.
void write_hubs_tsv(std::span<const HubEntry> hubs, std::ostream& out);

}  // namespace cooc
