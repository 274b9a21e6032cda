#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cooc/error.hpp"
#include "cooc/experiment.hpp"
#include "cooc/formats.hpp"
#include "cooc/tables.hpp"

using namespace cooc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return path / name;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Two small documents and a stoplist; "the" and "a" act as hubs.
struct SmallCorpus : TempDir {
  SmallCorpus() : TempDir("cooc_experiment_test") {
    write("one.txt",
          "The cat saw a dog. The dog saw the bird near a tree. A bird sang in the tree. "
          "The cat ran to the house. A dog ran to a tree and the bird flew.");
    write("two.txt",
          "The house had a door. A cat sat by the door. The bird saw a cat by the house. "
          "A tree grew near the door and the dog slept under a tree.");
    write("stop.txt", "# stoplist\nthe\na\nand\nto\nin\nby\n");
  }

  ExperimentConfig config() const {
    ExperimentConfig cfg;
    cfg.parts = {{"P1", {path / "one.txt"}}, {"P2", {path / "one.txt", path / "two.txt"}}};
    cfg.windows = {2, 3};
    cfg.stopword_file = path / "stop.txt";
    cfg.output_dir = path / "out";
    return cfg;
  }
};

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("manifest accepts a map or a list and resolves relative paths") {
    TempDir dir("cooc_manifest_test");
    const auto map = load_manifest(dir.write("m.json", R"({"C1": ["a.txt"], "C2": ["a.txt", "b.txt"]})"));
    REQUIRE(map.size() == 2);
    CHECK(map[0].name == "C1");
    CHECK(map[1].files.size() == 2);
    CHECK(map[0].files[0] == dir.path / "a.txt");

    const auto list = load_manifest(dir.write("l.json", R"([{"name": "X", "files": ["/abs/x.txt"]}])"));
    REQUIRE(list.size() == 1);
    CHECK(list[0].files[0] == fs::path("/abs/x.txt"));
  }

  TEST_CASE("experiment config fields and defaults") {
    TempDir dir("cooc_config_test");
    dir.write("m.json", R"({"C1": ["a.txt"]})");
    const auto cfg = load_experiment_config(dir.write("c.json", R"({
      "manifest": "m.json",
      "window_sizes": [2, 4],
      "stopword_policies": ["exclude", true],
      "stopword_file": "stop.txt",
      "metrics_mode": {"sample": 50, "seed": 9}
    })"));
    CHECK(cfg.parts.size() == 1);
    CHECK(cfg.windows == std::vector<std::size_t>{2, 4});
    CHECK(cfg.policies == std::vector<bool>{false, true});
    CHECK(cfg.stopword_file == dir.path / "stop.txt");
    CHECK(cfg.metrics.sample_sources == std::optional<std::size_t>(50));
    CHECK(cfg.metrics.seed == 9);
    CHECK(cfg.metrics.exact_threshold == 20000);

    const ExperimentConfig defaults;
    CHECK(defaults.windows == std::vector<std::size_t>{2, 3, 4, 5, 6});
    CHECK(defaults.policies == std::vector<bool>{true, false});
  }

  TEST_CASE("invalid configurations") {
    TempDir dir("cooc_bad_config_test");
    CHECK_THROWS_AS(load_experiment_config(dir.write("a.json", R"({"windows": [2]})")), ConfigError);
    CHECK_THROWS_AS(load_experiment_config(dir.write("b.json", "{not json")), ConfigError);
    CHECK_THROWS_AS(load_experiment_config(dir.write("c.json", R"({"stopword_policies": ["maybe"]})")),
                    ConfigError);

    ExperimentConfig cfg;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);  // no parts
    cfg.parts = {{"C1", {"a.txt"}}};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);  // exclusion without a stoplist
    cfg.policies = {true};
    CHECK_NOTHROW(cfg.validate());
    cfg.windows = {2, 1};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
}

TEST_SUITE("run_matrix") {
  TEST_CASE("one part, one window, one policy gives one record") {
    SmallCorpus corpus;
    auto cfg = corpus.config();
    cfg.parts.resize(1);
    cfg.windows = {2};
    cfg.policies = {true};
    const auto report = run_matrix(cfg);
    REQUIRE(report.records.size() == 1);
    CHECK(report.records[0].ok());
    CHECK(report.parts[0].documents == 1);
  }

  TEST_CASE("record count, ordering and per-policy invariants") {
    SmallCorpus corpus;
    const auto report = run_matrix(corpus.config());
    REQUIRE(report.records.size() == 2 * 2 * 2);
    CHECK(report.all_ok());
    std::size_t at = 0;
    for (const char* part : {"P1", "P2"}) {
      for (bool keep : {true, false}) {
        for (std::size_t n : {2u, 3u}) {
          const auto& r = report.records[at++];
          CHECK(r.part == part);
          CHECK(r.include_stopwords == keep);
          CHECK(r.window == n);
        }
        const auto* lo = report.find(part, 2, keep);
        const auto* hi = report.find(part, 3, keep);
        REQUIRE(lo);
        REQUIRE(hi);
        CHECK(lo->result->summary.nodes == hi->result->summary.nodes);
        CHECK(lo->result->summary.links <= hi->result->summary.links);
        CHECK(lo->result->summary.omega >= hi->result->summary.omega);
        CHECK(lo->result->diameter >= hi->result->diameter);
        CHECK(lo->result->average_path_length >= hi->result->average_path_length);
      }
    }
    CHECK(report.parts[1].stats.word_count > report.parts[0].stats.word_count);
  }

  TEST_CASE("nested parts match building from scratch") {
    SmallCorpus corpus;
    auto cfg = corpus.config();
    const auto nested = run_matrix(cfg);
    cfg.parts.erase(cfg.parts.begin());
    const auto alone = run_matrix(cfg);
    for (bool keep : {true, false}) {
      for (std::size_t n : {2u, 3u}) {
        const auto* a = nested.find("P2", n, keep);
        const auto* b = alone.find("P2", n, keep);
        CHECK(a->result->summary.links == b->result->summary.links);
        CHECK(a->result->average_path_length == b->result->average_path_length);
        CHECK(a->result->clustering == b->result->clustering);
        CHECK(a->diagnostics.tokens == b->diagnostics.tokens);
      }
    }
  }

  TEST_CASE("a failing cell is recorded and the rest still run") {
    SmallCorpus corpus;
    corpus.write("stops_only.txt", "The a. And the.");
    auto cfg = corpus.config();
    cfg.parts.insert(cfg.parts.begin(), CorpusPart{"S", {corpus.path / "stops_only.txt"}});
    const auto report = run_matrix(cfg);
    CHECK(report.records.size() == 3 * 2 * 2);
    CHECK_FALSE(report.all_ok());
    const auto* bad = report.find("S", 2, false);
    REQUIRE(bad);
    CHECK_FALSE(bad->ok());
    CHECK_FALSE(bad->error.empty());
    CHECK(report.find("P1", 2, false)->ok());
    CHECK(to_json(report)["records"][2]["error"].is_string());
  }

  TEST_CASE("observer sees every cell with its distribution") {
    SmallCorpus corpus;
    std::size_t calls = 0;
    run_matrix(corpus.config(), [&](const CellRecord& record, const CellArtifacts& artifacts) {
      ++calls;
      CHECK(artifacts.graph.node_count() == record.result->summary.nodes);
      double total = 0.0;
      for (const auto& row : artifacts.distribution) total += row.pdf;
      CHECK(std::abs(total - 1.0) <= 1e-12);
    });
    CHECK(calls == 8);
  }

  TEST_CASE("run_experiment writes the artefacts and is reproducible") {
    SmallCorpus corpus;
    auto cfg = corpus.config();
    std::ostringstream log;
    CHECK(run_experiment(cfg, log) == 0);
    const auto out = cfg.output_dir;
    for (const char* f : {"report.json", "config.json", "tables/P1.tsv", "tables/P2.tsv", "hubs/P1.tsv",
                          "dist/P1_2_sw.tsv", "dist/P2_3_nosw.tsv", "networks/P2_3_nosw.edges",
                          "networks/P2_3_nosw.json"}) {
      CHECK_MESSAGE(fs::exists(out / f), f);
    }
    const auto first = slurp(out / "report.json");
    cfg.output_dir = corpus.path / "again";
    std::ostringstream log2;
    CHECK(run_experiment(cfg, log2) == 0);
    CHECK(slurp(cfg.output_dir / "report.json") == first);
    CHECK(log.str().find("STOPWORD EFFECT:") != std::string::npos);
  }
}

TEST_SUITE("tables") {
  TEST_CASE("single-cell report fills only its policy's rows") {
    SmallCorpus corpus;
    auto cfg = corpus.config();
    cfg.parts.resize(1);
    cfg.windows = {2};
    cfg.policies = {true};
    const auto tsv = render_measure_table(run_matrix(cfg), "P1");
    const auto table = parse_measure_table(tsv);
    REQUIRE(table.rows.size() == 12);
    CHECK(table.windows == std::vector<std::size_t>{2});
    std::size_t populated = 0;
    for (const auto& row : table.rows) populated += table.at(row, 2).has_value() ? 1 : 0;
    CHECK(populated == 6);
    CHECK(table.at("N_sw", 2).has_value());
    CHECK_FALSE(table.at("N", 2).has_value());
    CHECK(tsv.find(std::string(kMissingCell)) != std::string::npos);
    CHECK(tsv.rfind("measure\tm_2\n", 0) == 0);
  }

  TEST_CASE("parsing recovers values at printed precision") {
    SmallCorpus corpus;
    const auto report = run_matrix(corpus.config());
    const auto table = parse_measure_table(render_measure_table(report, "P2"));
    CHECK(table.rows == std::vector<std::string>{"N_sw", "N", "K_sw", "K", "L_sw", "L", "D_sw", "D",
                                                  "C_sw", "C", "ω_sw", "ω"});
    for (bool keep : {true, false}) {
      const std::string sfx = keep ? "_sw" : "";
      for (std::size_t n : {2u, 3u}) {
        const auto& r = *report.find("P2", n, keep)->result;
        CHECK(*table.at("N" + sfx, n) == static_cast<double>(r.summary.nodes));
        CHECK(*table.at("K" + sfx, n) == static_cast<double>(r.summary.links));
        CHECK(*table.at("D" + sfx, n) == static_cast<double>(r.diameter));
        CHECK(*table.at("ω" + sfx, n) == static_cast<double>(r.summary.omega));
        CHECK(*table.at("L" + sfx, n) == doctest::Approx(std::round(r.average_path_length * 100) / 100));
        CHECK(*table.at("C" + sfx, n) == doctest::Approx(std::round(r.clustering * 100) / 100));
      }
    }
  }

  TEST_CASE("hub table has four column groups") {
    SmallCorpus corpus;
    const auto tsv = render_hub_table(run_matrix(corpus.config()), "P1");
    CHECK(tsv.rfind("rank\tsw_m2_word\tsw_m2_degree\tsw_m3_word\tsw_m3_degree\t"
                    "nosw_m2_word\tnosw_m2_degree\tnosw_m3_word\tnosw_m3_degree\n",
                    0) == 0);
    CHECK(tsv.find("\n1\tthe\t") != std::string::npos);
  }
}

TEST_SUITE("json") {
  TEST_CASE("key names") {
    CHECK(to_json(CorpusStats{3, 2, 1}).dump() == R"({"words":3,"unique_words":2,"stopwords":1})");
    CHECK(to_json(NetworkSummary{5, 10, 1}).dump() == R"({"N":5,"K":10,"omega":1})");
    const auto fit = to_json(PowerLawFit{2.5, 5, 0.01, 100});
    CHECK(fit.contains("alpha"));
    CHECK(fit.contains("x_min"));
    CHECK(fit.contains("ks"));
    CHECK(fit.contains("n_tail"));
    BuildDiagnostics d;
    const auto dj = to_json(d);
    for (const char* key : {"sentences", "tokens", "self_loops_skipped", "n", "include_stopwords"}) {
      CHECK(dj.contains(key));
    }
  }

  TEST_CASE("hubs TSV") {
    std::ostringstream out;
    const std::vector<HubEntry> hubs{{"the", 9}, {"a", 4}};
    write_hubs_tsv(hubs, out);
    CHECK(out.str() == "rank\tword\tdegree\n1\tthe\t9\n2\ta\t4\n");
  }
}
