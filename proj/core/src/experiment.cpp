#include "cooc/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "cooc/error.hpp"
#include "cooc/graph_io.hpp"
#include "cooc/tables.hpp"

namespace cooc {
namespace fs = std::filesystem;

namespace {

fs::path resolve(const fs::path& base_dir, const std::string& entry) {
  fs::path p(entry);
  return p.is_absolute() ? p : (base_dir / p).lexically_normal();
}

Json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<CorpusPart> parse_parts(const Json& j, const fs::path& base_dir) {
  std::vector<CorpusPart> parts;
  auto files_of = [&](const Json& list, const std::string& name) {
    if (!list.is_array()) throw ConfigError("part " + name + ": files must be a list");
    std::vector<fs::path> files;
    for (const auto& f : list) files.push_back(resolve(base_dir, f.get<std::string>()));
    return files;
  };
  if (j.is_object()) {
    for (const auto& [name, list] : j.items()) parts.push_back({name, files_of(list, name)});
  } else if (j.is_array()) {
    for (const auto& entry : j) {
      const auto name = entry.at("name").get<std::string>();
      parts.push_back({name, files_of(entry.at("files"), name)});
    }
  } else {
    throw ConfigError("corpus parts must be an object or a list");
  }
  return parts;
}

const char* policy_label(bool include_stopwords) { return include_stopwords ? "sw" : "nosw"; }

bool extends(const CorpusPart& previous, const CorpusPart& current) {
  return previous.files.size() <= current.files.size() &&
         std::equal(previous.files.begin(), previous.files.end(), current.files.begin());
}

void measure(const WeightedDigraph& graph, const MetricsOptions& options, CellRecord& record,
             std::vector<DistributionRow>& distribution) {
  const UndirectedView view(graph);
  const auto seq = degree_sequence(view);
  if (std::any_of(seq.degrees.begin(), seq.degrees.end(), [](auto d) { return d > 0; })) {
    distribution = emit_pdf_ccdf(seq);
  }
  const auto components = weak_components(view);
  const auto metrics = compute_metrics(graph, view, components, options);

  CellResult r;
  r.summary = metrics.summary;
  r.average_path_length = metrics.distances.average_path_length;
  r.diameter = metrics.distances.diameter;
  r.exact = metrics.distances.exact;
  r.sampled_sources = metrics.distances.sampled_sources;
  r.seed = metrics.distances.seed;
  r.clustering = metrics.clustering.average;
  r.hubs = metrics.hubs;
  r.fit = fit_power_law(seq);
  record.result = std::move(r);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (parts.empty()) throw ConfigError("at least one corpus part is required");
  std::set<std::string> names;
  for (const auto& part : parts) {
    if (part.name.empty()) throw ConfigError("corpus part names must be non-empty");
    if (!names.insert(part.name).second) throw ConfigError("duplicate corpus part " + part.name);
  }
  if (windows.empty()) throw ConfigError("at least one window size is required");
  for (const auto n : windows) {
    if (n < 2) throw ConfigError("window sizes must be >= 2");
  }
  if (policies.empty()) throw ConfigError("at least one stopword policy is required");
  const bool excludes = std::find(policies.begin(), policies.end(), false) != policies.end();
  if (excludes && stopword_file.empty()) {
    throw ConfigError("excluding stopwords needs a stopword file");
  }
}

std::vector<CorpusPart> load_manifest(const fs::path& path) {
  return parse_parts(read_json(path), path.parent_path());
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  const Json j = read_json(path);
  if (!j.is_object()) throw ConfigError(path.string() + ": expected a JSON object");
  const fs::path base = path.parent_path();
  static const std::set<std::string> known{"corpus_parts",  "manifest",     "window_sizes",
                                           "stopword_policies", "stopword_file", "metrics_mode",
                                           "output_dir"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ConfigError(path.string() + ": unknown key '" + key + "'");
  }

  ExperimentConfig cfg;
  try {
    if (j.contains("corpus_parts")) cfg.parts = parse_parts(j.at("corpus_parts"), base);
    if (j.contains("manifest")) {
      if (!cfg.parts.empty()) throw ConfigError("give either corpus_parts or manifest, not both");
      cfg.parts = load_manifest(resolve(base, j.at("manifest").get<std::string>()));
    }
    if (j.contains("window_sizes")) cfg.windows = j.at("window_sizes").get<std::vector<std::size_t>>();
    if (j.contains("stopword_policies")) {
      cfg.policies.clear();
      for (const auto& p : j.at("stopword_policies")) {
        if (p.is_boolean()) {
          cfg.policies.push_back(p.get<bool>());
        } else if (p == "include") {
          cfg.policies.push_back(true);
        } else if (p == "exclude") {
          cfg.policies.push_back(false);
        } else {
          throw ConfigError("stopword policy must be \"include\", \"exclude\" or a boolean");
        }
      }
    }
    if (j.contains("stopword_file")) {
      cfg.stopword_file = resolve(base, j.at("stopword_file").get<std::string>());
    }
    if (j.contains("output_dir")) cfg.output_dir = resolve(base, j.at("output_dir").get<std::string>());
    if (j.contains("metrics_mode")) {
      const auto& m = j.at("metrics_mode");
      cfg.metrics.force_exact = m.value("exact", false);
      if (m.contains("sample") && !m.at("sample").is_null()) {
        cfg.metrics.sample_sources = m.at("sample").get<std::size_t>();
      }
      cfg.metrics.seed = m.value("seed", cfg.metrics.seed);
      cfg.metrics.exact_threshold = m.value("exact_threshold", cfg.metrics.exact_threshold);
      cfg.metrics.default_samples = m.value("default_samples", cfg.metrics.default_samples);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return cfg;
}

Json to_json(const ExperimentConfig& config) {
  Json j;
  Json parts = Json::array();
  for (const auto& part : config.parts) {
    Json files = Json::array();
    for (const auto& f : part.files) files.push_back(f.string());
    parts.push_back({{"name", part.name}, {"files", files}});
  }
  j["corpus_parts"] = parts;
  j["window_sizes"] = config.windows;
  Json policies = Json::array();
  for (bool keep : config.policies) policies.push_back(keep ? "include" : "exclude");
  j["stopword_policies"] = policies;
  j["stopword_file"] = config.stopword_file.string();
  Json mode;
  mode["exact"] = config.metrics.force_exact;
  mode["sample"] = config.metrics.sample_sources ? Json(*config.metrics.sample_sources) : Json();
  mode["seed"] = config.metrics.seed;
  mode["exact_threshold"] = config.metrics.exact_threshold;
  mode["default_samples"] = config.metrics.default_samples;
  j["metrics_mode"] = mode;
  j["output_dir"] = config.output_dir.string();
  return j;
}

bool ExperimentReport::all_ok() const noexcept {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok(); });
}

const CellRecord* ExperimentReport::find(std::string_view part, std::size_t window,
                                         bool include_stopwords) const {
  for (const auto& r : records) {
    if (r.part == part && r.window == window && r.include_stopwords == include_stopwords) return &r;
  }
  return nullptr;
}

ExperimentReport run_matrix(const ExperimentConfig& config, const CellObserver& observer) {
  config.validate();
  StopwordList stops;
  if (!config.stopword_file.empty()) stops = load_stopwords(config.stopword_file).list;

  std::map<fs::path, Corpus> documents;
  for (const auto& part : config.parts) {
    for (const auto& file : part.files) {
      if (!documents.count(file)) documents.emplace(file, load_document(file));
    }
  }

  ExperimentReport report;
  report.windows = config.windows;
  report.policies = config.policies;
  for (const auto& part : config.parts) {
    Corpus whole;
    for (const auto& file : part.files) whole.append(documents.at(file));
    report.parts.push_back({part.name, part.files.size(), corpus_stats(whole, stops)});
  }

  const std::size_t n_policies = config.policies.size();
  const std::size_t n_windows = config.windows.size();
  report.records.resize(config.parts.size() * n_policies * n_windows);

  for (std::size_t q = 0; q < n_policies; ++q) {
    for (std::size_t w = 0; w < n_windows; ++w) {
      std::optional<NetworkBuilder> builder;
      const CorpusPart* previous = nullptr;
      for (std::size_t p = 0; p < config.parts.size(); ++p) {
        const auto& part = config.parts[p];
        auto& record = report.records[(p * n_policies + q) * n_windows + w];
        record.part = part.name;
        record.window = config.windows[w];
        record.include_stopwords = config.policies[q];
        try {
          std::size_t start = 0;
          if (builder && previous && extends(*previous, part)) {
            start = previous->files.size();
          } else {
            builder.emplace(WindowConfig{record.window, record.include_stopwords, stops});
          }
          previous = nullptr;
          for (std::size_t f = start; f < part.files.size(); ++f) {
            builder->add_corpus(documents.at(part.files[f]));
          }
          previous = &part;
        } catch (const std::exception& e) {
          builder.reset();
          record.error = std::string("build: ") + e.what();
          continue;
        }
        record.diagnostics = builder->diagnostics();

        std::vector<DistributionRow> distribution;
        try {
          measure(builder->graph(), config.metrics, record, distribution);
        } catch (const std::exception& e) {
          record.result.reset();
          record.error = e.what();
        }
        if (observer) observer(record, CellArtifacts{builder->graph(), distribution});
      }
    }
  }
  return report;
}

Json to_json(const ExperimentReport& report) {
  Json j;
  j["windows"] = report.windows;
  j["policies"] = report.policies;
  Json parts = Json::array();
  for (const auto& part : report.parts) {
    parts.push_back({{"name", part.name}, {"documents", part.documents}, {"stats", to_json(part.stats)}});
  }
  j["parts"] = parts;
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["part"] = r.part;
    rec["n"] = r.window;
    rec["include_stopwords"] = r.include_stopwords;
    rec["ok"] = r.ok();
    if (r.ok()) {
      const auto& res = *r.result;
      rec["N"] = res.summary.nodes;
      rec["K"] = res.summary.links;
      rec["L"] = res.average_path_length;
      rec["D"] = res.diameter;
      rec["C"] = res.clustering;
      rec["omega"] = res.summary.omega;
      rec["exact"] = res.exact;
      rec["sampled_sources"] = res.sampled_sources;
      rec["seed"] = res.seed;
      rec["alpha"] = res.fit.alpha;
      rec["x_min"] = res.fit.x_min;
      rec["ks"] = res.fit.ks_statistic;
      rec["n_tail"] = res.fit.n_tail;
      Json hubs = Json::array();
      for (const auto& h : res.hubs) hubs.push_back({{"word", h.word}, {"degree", h.degree}});
      rec["hubs"] = hubs;
    } else {
      rec["error"] = r.error;
    }
    rec["diagnostics"] = to_json(r.diagnostics);
    records.push_back(rec);
  }
  j["records"] = records;
  return j;
}

int run_experiment(const ExperimentConfig& config, std::ostream& log) {
  config.validate();
  const fs::path out = config.output_dir;
  for (const char* sub : {"tables", "hubs", "dist", "networks"}) fs::create_directories(out / sub);
  write_text(out / "config.json", to_json(config).dump(2) + "\n");

  auto observer = [&](const CellRecord& record, const CellArtifacts& artifacts) {
    const std::string stem =
        record.part + "_" + std::to_string(record.window) + "_" + policy_label(record.include_stopwords);
    save_network(artifacts.graph, out / "networks" / (stem + ".edges"));
    if (!artifacts.distribution.empty()) {
      std::ofstream dist(out / "dist" / (stem + ".tsv"), std::ios::binary);
      write_distribution_tsv(artifacts.distribution, dist);
    }
    log << record.part << " m_" << record.window << ' ' << policy_label(record.include_stopwords);
    if (record.ok()) {
      const auto& r = *record.result;
      log << ": N=" << r.summary.nodes << " K=" << r.summary.links << " L="
          << fixed2(r.average_path_length) << " D=" << r.diameter << " C=" << fixed2(r.clustering)
          << " omega=" << r.summary.omega << " alpha=" << fixed2(r.fit.alpha) << '\n';
    } else {
      log << ": FAILED (" << record.error << ")\n";
    }
  };
  const auto report = run_matrix(config, observer);

  write_text(out / "report.json", to_json(report).dump(2) + "\n");
  for (const auto& part : report.parts) {
    write_text(out / "tables" / (part.name + ".tsv"), render_measure_table(report, part.name));
    write_text(out / "hubs" / (part.name + ".tsv"), render_hub_table(report, part.name));
  }
  print_stopword_banner(report, log);
  for (const auto& r : report.records) {
    if (!r.ok() && r.diagnostics.window == 0) {
      log << r.part << " m_" << r.window << ' ' << policy_label(r.include_stopwords)
          << ": FAILED (" << r.error << ")\n";
    }
  }
  return report.all_ok() ? 0 : 1;
}

std::vector<StopwordEffect> stopword_effects(const ExperimentReport& report) {
  std::vector<StopwordEffect> effects;
  for (const auto& part : report.parts) {
    for (const auto n : report.windows) {
      if (n < 3) continue;
      const auto* with = report.find(part.name, n, true);
      const auto* without = report.find(part.name, n, false);
      if (!with || !without || !with->ok() || !without->ok()) continue;
      StopwordEffect e;
      e.part = part.name;
      e.window = n;
      e.path_length_with = with->result->average_path_length;
      e.path_length_without = without->result->average_path_length;
      e.clustering_with = with->result->clustering;
      e.clustering_without = without->result->clustering;
      e.as_expected = e.path_length_with < e.path_length_without &&
                      e.clustering_with > e.clustering_without;
      effects.push_back(e);
    }
  }
  return effects;
}

bool print_stopword_banner(const ExperimentReport& report, std::ostream& out) {
  const auto effects = stopword_effects(report);
  bool all = !effects.empty();
  for (const auto& e : effects) {
    out << "  " << e.part << " m_" << e.window << ": L_sw=" << fixed2(e.path_length_with)
        << " L=" << fixed2(e.path_length_without) << " C_sw=" << fixed2(e.clustering_with)
        << " C=" << fixed2(e.clustering_without) << (e.as_expected ? "  ok" : "  differs") << '\n';
    all = all && e.as_expected;
  }
  if (effects.empty()) {
    out << "STOPWORD EFFECT: OBSERVED-DIFFERENT (no comparable cells)\n";
  } else {
    out << "STOPWORD EFFECT: " << (all ? "PASS" : "OBSERVED-DIFFERENT")
        << " (expect L_sw < L and C_sw > C for n >= 3)\n";
  }
  return all;
}

}  // namespace cooc
