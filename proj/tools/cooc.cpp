// cooc: build word co-occurrence networks from text and measure them.
//
//   cooc stats   <files...> | --manifest m.json  [--stopwords f]
//   cooc build   <files...> --window n [--stopwords f] [--keep-stopwords] [--out dir]
//   cooc metrics <files...> --window n | --network x.edges  [--exact | --sample k] [--seed s]
//   cooc fit     <files...> --window n | --network x.edges  [--out dir]
//   cooc matrix  [--config cfg.json] [--manifest m.json] [--stopwords f] [--window n]...

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cooc/degree_dist.hpp"
#include "cooc/error.hpp"
#include "cooc/experiment.hpp"
#include "cooc/formats.hpp"
#include "cooc/graph_io.hpp"
#include "cooc/metrics.hpp"
#include "cooc/net_build.hpp"
#include "cooc/text_ingest.hpp"

namespace fs = std::filesystem;

namespace {

struct NetworkSource {
  std::vector<fs::path> files;
  fs::path network;
  std::size_t window = 2;
  fs::path stopwords;
  bool keep_stopwords = false;

  void add_options(CLI::App* cmd, bool allow_network) {
    cmd->add_option("files", files, "UTF-8 text files, read in order")->check(CLI::ExistingFile);
    if (allow_network) {
      cmd->add_option("--network", network, "saved edge list instead of text")
          ->check(CLI::ExistingFile);
    }
    cmd->add_option("--window", window, "co-occurrence window size n (>= 2)");
    cmd->add_option("--stopwords", stopwords, "stopword file, one form per line")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--keep-stopwords", keep_stopwords, "keep stopwords even if a list is given");
  }

  cooc::WindowConfig window_config() const {
    cooc::WindowConfig cfg;
    cfg.window = window;
    cfg.include_stopwords = keep_stopwords || stopwords.empty();
    if (!stopwords.empty()) cfg.stopwords = cooc::load_stopwords(stopwords).list;
    return cfg;
  }

  cooc::BuiltNetwork build() const {
    if (files.empty()) throw cooc::ConfigError("no input files given");
    return cooc::build_network(cooc::load_corpus(files), window_config());
  }

  cooc::WeightedDigraph graph() const {
    if (!network.empty()) {
      if (!files.empty()) throw cooc::ConfigError("give either text files or --network, not both");
      return cooc::load_network(network);
    }
    return build().graph;
  }
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cooc::IoError("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word co-occurrence network toolkit"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads for metrics (0 = all cores)");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics (words, unique words, stopwords)");
  std::vector<fs::path> stats_files;
  fs::path stats_manifest, stats_stopwords;
  stats_cmd->add_option("files", stats_files, "UTF-8 text files")->check(CLI::ExistingFile);
  stats_cmd->add_option("--manifest", stats_manifest, "corpus manifest JSON")->check(CLI::ExistingFile);
  stats_cmd->add_option("--stopwords", stats_stopwords, "stopword file")->check(CLI::ExistingFile);

  // build
  auto* build_cmd = app.add_subcommand("build", "Build one network and write it as an edge list");
  NetworkSource build_src;
  build_src.add_options(build_cmd, false);
  fs::path build_out;
  build_cmd->add_option("--out", build_out, "output directory (edge list goes to stdout if omitted)");

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "N, K, L, D, C, omega and hubs of one network");
  NetworkSource metrics_src;
  metrics_src.add_options(metrics_cmd, true);
  bool exact = false;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
  fs::path metrics_out;
  metrics_cmd->add_flag("--exact", exact, "all-pairs distances regardless of size");
  metrics_cmd->add_option("--sample", sample, "sampled distances from k BFS roots");
  metrics_cmd->add_option("--seed", seed, "seed for root sampling");
  metrics_cmd->add_option("--out", metrics_out, "directory for metrics.json and hubs.tsv");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Discrete power-law fit of the degree distribution");
  NetworkSource fit_src;
  fit_src.add_options(fit_cmd, true);
  fs::path fit_out;
  fit_cmd->add_option("--out", fit_out, "directory for fit.json and distribution.tsv");

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "Full parts x windows x policies experiment");
  fs::path config_path, matrix_manifest, matrix_stopwords, matrix_out;
  std::vector<std::size_t> matrix_windows;
  bool matrix_keep = false, matrix_exact = false;
  std::optional<std::size_t> matrix_sample;
  std::optional<std::uint64_t> matrix_seed;
  matrix_cmd->add_option("--config", config_path, "experiment config JSON")->check(CLI::ExistingFile);
  matrix_cmd->add_option("--manifest", matrix_manifest, "corpus manifest JSON")->check(CLI::ExistingFile);
  matrix_cmd->add_option("--stopwords", matrix_stopwords, "stopword file")->check(CLI::ExistingFile);
  matrix_cmd->add_option("--window", matrix_windows, "window sizes (repeatable)");
  matrix_cmd->add_flag("--keep-stopwords", matrix_keep, "only build stopword-including networks");
  matrix_cmd->add_flag("--exact", matrix_exact, "all-pairs distances for every network");
  matrix_cmd->add_option("--sample", matrix_sample, "sampled distances from k BFS roots");
  matrix_cmd->add_option("--seed", matrix_seed, "seed for root sampling");
  matrix_cmd->add_option("--out", matrix_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    cooc::MetricsOptions options;
    options.threads = threads;

    if (*stats_cmd) {
      cooc::StopwordList stops;
      if (!stats_stopwords.empty()) stops = cooc::load_stopwords(stats_stopwords).list;
      if (!stats_manifest.empty()) {
        cooc::Json out;
        for (const auto& part : cooc::load_manifest(stats_manifest)) {
          out[part.name] = cooc::to_json(cooc::corpus_stats(cooc::load_corpus(part.files), stops));
        }
        std::cout << out.dump(2) << '\n';
      } else {
        if (stats_files.empty()) throw cooc::ConfigError("no input files given");
        std::cout << cooc::to_json(cooc::corpus_stats(cooc::load_corpus(stats_files), stops)).dump(2)
                  << '\n';
      }
      return 0;
    }

    if (*build_cmd) {
      const auto built = build_src.build();
      if (build_out.empty()) {
        cooc::write_edge_list(built.graph, std::cout);
        std::cerr << cooc::to_json(built.diagnostics).dump() << '\n';
      } else {
        fs::create_directories(build_out);
        cooc::save_network(built.graph, build_out / "network.edges");
        write_file(build_out / "build.json", cooc::to_json(built.diagnostics).dump(2) + "\n");
        std::cout << cooc::to_json(built.diagnostics).dump(2) << '\n';
      }
      return 0;
    }

    if (*metrics_cmd) {
      options.force_exact = exact;
      options.sample_sources = sample;
      options.seed = seed;
      const auto graph = metrics_src.graph();
      const auto metrics = cooc::compute_metrics(graph, options);
      const auto json = cooc::metrics_json(metrics).dump(2);
      std::cout << json << '\n';
      if (!metrics_out.empty()) {
        fs::create_directories(metrics_out);
        write_file(metrics_out / "metrics.json", json + "\n");
        std::ofstream hubs(metrics_out / "hubs.tsv", std::ios::binary);
        cooc::write_hubs_tsv(metrics.hubs, hubs);
      }
      return 0;
    }

    if (*fit_cmd) {
      const auto graph = fit_src.graph();
      const auto seq = cooc::degree_sequence(graph);
      const auto fit = cooc::fit_power_law(seq);
      const auto json = cooc::to_json(fit).dump(2);
      std::cout << json << '\n';
      if (!fit_out.empty()) {
        fs::create_directories(fit_out);
        write_file(fit_out / "fit.json", json + "\n");
        std::ofstream dist(fit_out / "distribution.tsv", std::ios::binary);
        cooc::write_distribution_tsv(cooc::emit_pdf_ccdf(seq), dist);
      }
      return 0;
    }

    if (*matrix_cmd) {
      cooc::ExperimentConfig cfg;
      if (!config_path.empty()) cfg = cooc::load_experiment_config(config_path);
      if (!matrix_manifest.empty()) cfg.parts = cooc::load_manifest(matrix_manifest);
      if (!matrix_stopwords.empty()) cfg.stopword_file = matrix_stopwords;
      if (!matrix_windows.empty()) cfg.windows = matrix_windows;
      if (matrix_keep) cfg.policies = {true};
      if (matrix_exact) cfg.metrics.force_exact = true;
      if (matrix_sample) cfg.metrics.sample_sources = matrix_sample;
      if (matrix_seed) cfg.metrics.seed = *matrix_seed;
      if (!matrix_out.empty()) cfg.output_dir = matrix_out;
      cfg.metrics.threads = threads;
      return cooc::run_experiment(cfg, std::cout);
    }
  } catch (const cooc::ConfigError& e) {
    std::cerr << "cooc: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cooc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
