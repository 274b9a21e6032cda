#include <doctest.h>

#include <random>
#include <set>

#include "cooc/error.hpp"
#include "cooc/net_build.hpp"

using namespace cooc;

namespace {

using Pairs = std::set<std::pair<std::string, std::string>>;

Pairs link_pairs(const WeightedDigraph& g) {
  Pairs out;
  for (const auto& l : g.links()) out.emplace(g.name(l.source), g.name(l.target));
  return out;
}

BuiltNetwork build(std::string_view text, std::size_t n) {
  WindowConfig cfg;
  cfg.window = n;
  return build_network(make_corpus(text, "t"), cfg);
}

}  // namespace

TEST_SUITE("build_network") {
  TEST_CASE("five-word sentence at each window size") {
    const Pairs n2{{"w1", "w2"}, {"w2", "w3"}, {"w3", "w4"}, {"w4", "w5"}};
    Pairs n3 = n2;
    n3.insert({{"w1", "w3"}, {"w2", "w4"}, {"w3", "w5"}});
    Pairs n4 = n3;
    n4.insert({{"w1", "w4"}, {"w2", "w5"}});
    Pairs n5 = n4;
    n5.insert({"w1", "w5"});

    CHECK(link_pairs(build("w1 w2 w3 w4 w5", 2).graph) == n2);
    CHECK(link_pairs(build("w1 w2 w3 w4 w5", 3).graph) == n3);
    CHECK(link_pairs(build("w1 w2 w3 w4 w5", 4).graph) == n4);
    CHECK(link_pairs(build("w1 w2 w3 w4 w5", 5).graph) == n5);
    CHECK(n3.size() == 7);
    CHECK(n4.size() == 9);
    CHECK(n5.size() == 10);
    const auto full = build("w1 w2 w3 w4 w5", 5);
    for (const auto& l : full.graph.links()) CHECK(l.weight == 1);

    const auto s = network_summary(build("w1 w2 w3 w4 w5", 5).graph);
    CHECK(s.nodes == 5);
    CHECK(s.links == 10);
    CHECK(s.omega == 1);
  }

  TEST_CASE("repeated word inside the window is a skipped self-loop") {
    const auto b = build("a b a", 3);
    CHECK(link_pairs(b.graph) == Pairs{{"a", "b"}, {"b", "a"}});
    CHECK(b.graph.weight(*b.graph.find("a"), *b.graph.find("b")) == 1);
    CHECK(b.graph.weight(*b.graph.find("b"), *b.graph.find("a")) == 1);
    CHECK(b.diagnostics.self_loops_skipped == 1);
  }

  TEST_CASE("windows stop at sentence boundaries") {
    const auto b = build("a b. c d", 4);
    CHECK(link_pairs(b.graph) == Pairs{{"a", "b"}, {"c", "d"}});
    CHECK(b.diagnostics.sentences == 2);
    CHECK(b.diagnostics.tokens == 4);
  }

  TEST_CASE("single-word sentences contribute isolated nodes") {
    const auto b = build("alone. a b", 2);
    CHECK(b.graph.node_count() == 3);
    CHECK(b.graph.link_count() == 1);
    CHECK(network_summary(b.graph).omega == 2);
  }

  TEST_CASE("empty corpus gives an empty network") {
    const auto s = network_summary(build("", 2).graph);
    CHECK(s.nodes == 0);
    CHECK(s.links == 0);
    CHECK(s.omega == 0);
  }

  TEST_CASE("window below 2 is a configuration error") {
    WindowConfig cfg;
    cfg.window = 1;
    CHECK_THROWS_AS(build_network(Corpus{}, cfg), ConfigError);
    cfg.window = 0;
    CHECK_THROWS_AS(NetworkBuilder{cfg}, ConfigError);
  }

  TEST_CASE("stopwords are removed before windowing") {
    WindowConfig cfg;
    cfg.window = 2;
    cfg.include_stopwords = false;
    cfg.stopwords.insert("the");
    const auto b = build_network(make_corpus("cat the dog", "t"), cfg);
    CHECK(link_pairs(b.graph) == Pairs{{"cat", "dog"}});
    CHECK_FALSE(b.diagnostics.include_stopwords);

    StopwordList stops;
    stops.insert("the");
    const auto stats = corpus_stats(filter_stopwords(make_corpus("cat the dog. the", "t"), stops), {});
    CHECK(stats.unique_words == build_network(make_corpus("cat the dog. the", "t"), cfg).graph.node_count());
  }

  TEST_CASE("pair occurrences match the window count formula") {
    CHECK(window_pair_count(5, 2) == 4);
    CHECK(window_pair_count(5, 5) == 10);
    CHECK(window_pair_count(5, 9) == 10);
    CHECK(window_pair_count(0, 3) == 0);
    CHECK(window_pair_count(1, 3) == 0);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t length = 1 + rng() % 30;
      const std::size_t n = 2 + rng() % 8;
      std::string text;
      for (std::size_t i = 0; i < length; ++i) text += "t" + std::to_string(rng() % 6) + " ";
      const auto b = build(text, n);
      std::uint64_t brute = 0;
      for (std::size_t p = 0; p < length; ++p) brute += std::min(n - 1, length - 1 - p);
      Weight total = 0;
      for (const auto& l : b.graph.links()) total += l.weight;
      CHECK(total + b.diagnostics.self_loops_skipped == brute);
      CHECK(window_pair_count(length, n) == brute);
    }
  }

  TEST_CASE("property: growing the window only adds links and weight") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      std::string text;
      for (int i = 0; i < 150; ++i) {
        text += "t" + std::to_string(rng() % 25);
        text += rng() % 9 == 0 ? ". " : " ";
      }
      const auto corpus = make_corpus(text, "t");
      WindowConfig cfg;
      cfg.window = 2;
      auto previous = build_network(corpus, cfg).graph;
      for (std::size_t n = 3; n <= 7; ++n) {
        cfg.window = n;
        const auto next = build_network(corpus, cfg).graph;
        CHECK(next.node_count() == previous.node_count());
        CHECK(next.link_count() >= previous.link_count());
        CHECK(weak_components(next).omega <= weak_components(previous).omega);
        for (const auto& l : previous.links()) {
          const auto s = next.find(previous.name(l.source));
          const auto t = next.find(previous.name(l.target));
          REQUIRE(s);
          REQUIRE(t);
          CHECK(next.weight(*s, *t) >= l.weight);
        }
        previous = next;
      }
    }
  }

  TEST_CASE("builder continues across documents like a single build") {
    WindowConfig cfg;
    cfg.window = 3;
    const auto one = make_corpus("a b c. d e", "1");
    const auto two = make_corpus("c a f. b", "2");
    NetworkBuilder builder(cfg);
    builder.add_corpus(one);
    const auto partial_links = builder.graph().link_count();
    builder.add_corpus(two);
    CHECK(builder.graph().link_count() >= partial_links);
    Corpus both = one;
    both.append(two);
    const auto whole = build_network(both, cfg);
    const auto incremental = std::move(builder).release();
    CHECK(link_pairs(incremental.graph) == link_pairs(whole.graph));
    CHECK(incremental.diagnostics.tokens == whole.diagnostics.tokens);
    CHECK(incremental.diagnostics.sentences == whole.diagnostics.sentences);
  }
}
