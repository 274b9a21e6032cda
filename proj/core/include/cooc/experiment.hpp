#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cooc/degree_dist.hpp"
#include "cooc/formats.hpp"
#include "cooc/metrics.hpp"
#include "cooc/net_build.hpp"
#include "cooc/text_ingest.hpp"

namespace cooc {

struct CorpusPart {
  std::string name;
  std::vector<std::filesystem::path> files;
};

struct ExperimentConfig {
  std::vector<CorpusPart> parts;
  std::vector<std::size_t> windows{2, 3, 4, 5, 6};
  std::vector<bool> policies{true, false};  // include_stopwords per policy
  std::filesystem::path stopword_file;
  MetricsOptions metrics;
  std::filesystem::path output_dir = "cooc-out";

  /// Throws ConfigError on an empty part list, window < 2, or an
  /// exclusion policy without a stopword file.
  void validate() const;
};

/// Reads a corpus manifest: either {"C1": [files...], ...} or
/// [{"name": "C1", "files": [...]}, ...]. Relative paths resolve against the
/// manifest's directory.
std::vector<CorpusPart> load_manifest(const std::filesystem::path& path);

/// Reads an ExperimentConfig JSON document. Relative paths resolve against
/// the config file's directory; "manifest" may stand in for "corpus_parts".
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
Json to_json(const ExperimentConfig& config);

struct CellResult {
  NetworkSummary summary;
  double average_path_length = 0.0;
  std::uint32_t diameter = 0;
  bool exact = true;
  std::size_t sampled_sources = 0;
  std::uint64_t seed = 0;
  double clustering = 0.0;
  PowerLawFit fit;
  std::vector<HubEntry> hubs;
};

struct CellRecord {
  std::string part;
  std::size_t window = 0;
  bool include_stopwords = true;
  BuildDiagnostics diagnostics;
  std::optional<CellResult> result;
  std::string error;  // set when the cell failed

  bool ok() const noexcept { return result.has_value(); }
};

struct PartSummary {
  std::string name;
  std::size_t documents = 0;
  CorpusStats stats;
};

struct ExperimentReport {
  std::vector<std::size_t> windows;
  std::vector<bool> policies;
  std::vector<PartSummary> parts;
  std::vector<CellRecord> records;  // part-major, then policy, then window

  bool all_ok() const noexcept;
  const CellRecord* find(std::string_view part, std::size_t window, bool include_stopwords) const;
};

struct CellArtifacts {
  const WeightedDigraph& graph;
  std::span<const DistributionRow> distribution;  // empty if no positive degree
};

using CellObserver = std::function<void(const CellRecord&, const CellArtifacts&)>;

/// Builds and measures every (part, window, policy) network. A nested part
/// whose file list extends the previous part's list continues from that
/// part's build instead of starting over. A failing cell is recorded and the
/// others still run. Output depends only on the config (and its seed).
ExperimentReport run_matrix(const ExperimentConfig& config, const CellObserver& observer = {});

Json to_json(const ExperimentReport& report);

/// Runs the matrix and writes report.json, tables/, hubs/, dist/, networks/
/// and config.json under config.output_dir. Returns 0 only when every cell
/// succeeded.
int run_experiment(const ExperimentConfig& config, std::ostream& log);

/// Stopword effect check for one part and window: with stopwords kept,
/// paths are expected to be shorter and clustering higher.
struct StopwordEffect {
  std::string part;
  std::size_t window = 0;
  double path_length_with = 0.0, path_length_without = 0.0;
  double clustering_with = 0.0, clustering_without = 0.0;
  bool as_expected = false;
};

/// Comparisons for every window >= 3 where both policies succeeded.
std::vector<StopwordEffect> stopword_effects(const ExperimentReport& report);

/// Prints one line per comparison and a PASS / OBSERVED-DIFFERENT banner.
/// Returns true when every comparison matched the expectation.
bool print_stopword_banner(const ExperimentReport& report, std::ostream& out);

}  // namespace cooc
