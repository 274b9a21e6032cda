#include <doctest.h>

#include <cmath>
#include <random>

#include "cooc/error.hpp"
#include "cooc/metrics.hpp"
#include "test_support.hpp"

using namespace cooc;

namespace {

WeightedDigraph chain(std::initializer_list<const char*> words) {
  WeightedDigraph g;
  const char* previous = nullptr;
  for (const char* w : words) {
    if (previous) g.add_cooccurrence(previous, w);
    previous = w;
  }
  return g;
}

WeightedDigraph triangle(Weight ij, Weight ik, Weight jk) {
  WeightedDigraph g;
  const auto i = g.intern("i"), j = g.intern("j"), k = g.intern("k");
  g.add_weight(i, j, ij);
  g.add_weight(i, k, ik);
  g.add_weight(j, k, jk);
  return g;
}

WeightedDigraph star(std::size_t leaves) {
  WeightedDigraph g;
  g.intern("hub");
  for (std::size_t i = 0; i < leaves; ++i) g.add_cooccurrence("hub", "leaf" + std::to_string(i));
  return g;
}

}  // namespace

TEST_SUITE("bfs_distances") {
  TEST_CASE("path and isolated node") {
    auto g = chain({"a", "b", "c"});
    g.intern("z");
    const UndirectedView v(g);
    CHECK(bfs_distances(v, 0) == std::vector<std::int32_t>{0, 1, 2, kUnreachable});
    CHECK(bfs_distances(v, 3) == std::vector<std::int32_t>{kUnreachable, kUnreachable, kUnreachable, 0});
    CHECK_THROWS_AS(bfs_distances(v, 4), GraphError);
  }

  TEST_CASE("matches Floyd-Warshall on random graphs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 48;
      const auto rg = test::random_graph(rng, n, 0.01 + 0.05 * static_cast<double>(rng() % 6), 4);
      const UndirectedView v(rg.graph);
      const auto fw = test::floyd_warshall(rg.dense);
      for (NodeId s = 0; s < n; ++s) {
        const auto d = bfs_distances(v, s);
        for (std::size_t t = 0; t < n; ++t) {
          CHECK(d[t] == (fw[s][t] == test::kInf ? kUnreachable : fw[s][t]));
        }
      }
    }
  }
}

TEST_SUITE("distance_stats") {
  TEST_CASE("path of four nodes") {
    const UndirectedView v(chain({"a", "b", "c", "d"}));
    const auto s = distance_stats(v, DistanceMode::all_pairs());
    CHECK(s.average_path_length == 20.0 / 12.0);
    CHECK(s.diameter == 3);
    CHECK(s.pair_count == 12);
    CHECK(s.exact);
    REQUIRE(s.per_node_average.size() == 4);
    CHECK(s.per_node_average[0].average == 2.0);
    CHECK(s.per_node_average[1].average == 4.0 / 3.0);
  }

  TEST_CASE("triangle") {
    const auto s = distance_stats(UndirectedView(triangle(1, 1, 1)), DistanceMode::all_pairs());
    CHECK(s.average_path_length == 1.0);
    CHECK(s.diameter == 1);
  }

  TEST_CASE("restricted to the largest component") {
    auto g = chain({"a", "b", "c"});
    g.add_cooccurrence("x", "y");
    const auto s = distance_stats(UndirectedView(g), DistanceMode::all_pairs());
    CHECK(s.component_size == 3);
    CHECK(s.average_path_length == 8.0 / 6.0);
    CHECK(s.diameter == 2);
  }

  TEST_CASE("graphs without links are degenerate") {
    WeightedDigraph g;
    g.intern("a");
    g.intern("b");
    CHECK_THROWS_WITH_AS(distance_stats(UndirectedView(g), DistanceMode::all_pairs()),
                         doctest::Contains("degenerate"), GraphError);
    CHECK_THROWS_AS(distance_stats(UndirectedView(WeightedDigraph{}), DistanceMode::all_pairs()),
                    GraphError);
  }

  TEST_CASE("property: D >= L, and sampling every node reproduces exact results") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 5 + rng() % 60;
      auto rg = test::random_graph(rng, n, 0.08, 3);
      rg.graph.add_cooccurrence(0, 1);
      const UndirectedView v(rg.graph);
      const auto exact = distance_stats(v, DistanceMode::all_pairs());
      CHECK(static_cast<double>(exact.diameter) >= exact.average_path_length);
      const auto sampled = distance_stats(v, DistanceMode::sampled(exact.component_size, 99));
      CHECK(sampled.average_path_length == exact.average_path_length);
      CHECK(sampled.diameter == exact.diameter);
      CHECK(sampled.pair_count == exact.pair_count);
      CHECK_FALSE(sampled.exact);
      REQUIRE(sampled.per_node_average.size() == exact.per_node_average.size());
      for (std::size_t r = 0; r < exact.per_node_average.size(); ++r) {
        CHECK(sampled.per_node_average[r].node == exact.per_node_average[r].node);
        CHECK(sampled.per_node_average[r].average == exact.per_node_average[r].average);
      }
    }
  }

  TEST_CASE("sampling is seeded and never exceeds the exact diameter") {
    std::mt19937_64 rng(303);
    auto rg = test::random_graph(rng, 64, 0.06, 2);
    rg.graph.add_cooccurrence(0, 1);
    const UndirectedView v(rg.graph);
    const auto exact = distance_stats(v, DistanceMode::all_pairs());
    const auto a = distance_stats(v, DistanceMode::sampled(10, 5));
    const auto b = distance_stats(v, DistanceMode::sampled(10, 5));
    CHECK(a.average_path_length == b.average_path_length);
    CHECK(a.sampled_sources == std::min<std::size_t>(10, exact.component_size));
    CHECK(a.seed == 5);
    CHECK(a.diameter <= exact.diameter);
  }

  TEST_CASE("thread count does not change results") {
    std::mt19937_64 rng(404);
    auto rg = test::random_graph(rng, 64, 0.05, 5);
    rg.graph.add_cooccurrence(0, 1);
    const UndirectedView v(rg.graph);
    const auto parts = weak_components(v);
    const auto one = distance_stats(v, parts, DistanceMode::all_pairs(), 1);
    const auto four = distance_stats(v, parts, DistanceMode::all_pairs(), 4);
    CHECK(one.average_path_length == four.average_path_length);
    CHECK(one.diameter == four.diameter);
    CHECK(clustering_coefficients(v, 1) == clustering_coefficients(v, 4));
  }
}

TEST_SUITE("clustering") {
  TEST_CASE("equal-weight triangle is fully clustered") {
    const UndirectedView v(triangle(3, 3, 3));
    for (NodeId i = 0; i < 3; ++i) CHECK(node_clustering(v, i, 3.0) == 1.0);
  }

  TEST_CASE("weighted triangle hand value") {
    const UndirectedView v(triangle(1, 1, 8));
    CHECK(node_clustering(v, 0, 8.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(clustering_coefficients(v)[0] == doctest::Approx(0.25).epsilon(1e-15));
  }

  TEST_CASE("star centre has no closed triples") {
    const UndirectedView v(star(5));
    CHECK(node_clustering(v, 0, 1.0) == 0.0);
    CHECK(average_clustering(star(5)).average == 0.0);
  }

  TEST_CASE("single link averages to zero") {
    const auto s = average_clustering(chain({"a", "b"}));
    CHECK(s.average == 0.0);
    CHECK(s.nodes_averaged == 2);
  }

  TEST_CASE("two disjoint triangles: tie resolved, C = 1") {
    WeightedDigraph g;
    g.add_cooccurrence("a", "b");
    g.add_cooccurrence("b", "c");
    g.add_cooccurrence("a", "c");
    g.add_cooccurrence("x", "y");
    g.add_cooccurrence("y", "z");
    g.add_cooccurrence("x", "z");
    const auto s = average_clustering(g);
    CHECK(s.average == 1.0);
    CHECK(s.nodes_averaged == 3);
    CHECK(s.component_used == weak_components(g).assignment[*g.find("a")]);
  }

  TEST_CASE("empty graph is an error") {
    CHECK_THROWS_AS(average_clustering(WeightedDigraph{}), GraphError);
  }

  TEST_CASE("property: unchanged when every weight is multiplied by 7") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 30; ++trial) {
      const auto rg = test::random_graph(rng, 3 + rng() % 28, 0.4, 12);
      WeightedDigraph scaled;
      for (auto name : rg.graph.names()) scaled.intern(name);
      for (const auto& l : rg.graph.links()) scaled.add_weight(l.source, l.target, 7 * l.weight);
      const UndirectedView a(rg.graph), b(scaled);
      CHECK(clustering_coefficients(a) == clustering_coefficients(b));
      for (NodeId i = 0; i < a.node_count(); ++i) {
        CHECK(node_clustering(a, i, static_cast<double>(a.max_weight())) ==
              node_clustering(b, i, static_cast<double>(b.max_weight())));
      }
    }
  }

  TEST_CASE("property: matches enumeration oracles and stays in [0, 1]") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng() % 31;
      const bool unweighted = trial % 2 == 0;
      const auto rg = test::random_graph(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 7),
                                         unweighted ? 1 : 20);
      const UndirectedView v(rg.graph);
      if (v.edge_count() == 0) continue;
      const auto bulk = clustering_coefficients(v);
      const double max_w = static_cast<double>(v.max_weight());
      for (NodeId i = 0; i < n; ++i) {
        const double expected = test::clustering_oracle(rg.dense, i);
        CHECK(std::abs(node_clustering(v, i, max_w) - expected) <= 1e-12);
        CHECK(std::abs(bulk[i] - expected) <= 1e-12);
        CHECK(bulk[i] >= 0.0);
        CHECK(bulk[i] <= 1.0);
        if (v.degree(i) < 2) CHECK(bulk[i] == 0.0);
      }
    }
  }
}

TEST_SUITE("hubs") {
  TEST_CASE("star centre first") {
    const auto hubs = top_hubs(star(5), 1);
    REQUIRE(hubs.size() == 1);
    CHECK(hubs[0].word == "hub");
    CHECK(hubs[0].degree == 5);
  }

  TEST_CASE("ties break alphabetically") {
    const auto hubs = top_hubs(chain({"c", "b", "a"}), 3);
    REQUIRE(hubs.size() == 3);
    CHECK(hubs[0].word == "b");
    CHECK(hubs[0].degree == 2);
    CHECK(hubs[1].word == "a");
    CHECK(hubs[2].word == "c");
  }

  TEST_CASE("k larger than N returns every node; k = 0 is rejected") {
    CHECK(top_hubs(chain({"a", "b"}), 10).size() == 2);
    CHECK_THROWS_AS(top_hubs(chain({"a", "b"}), 0), ConfigError);
  }

  TEST_CASE("degree counts distinct neighbours, not weight or direction") {
    WeightedDigraph g;
    g.add_cooccurrence("a", "b");
    g.add_cooccurrence("b", "a");
    g.add_cooccurrence("a", "b");
    CHECK(top_hubs(g, 1)[0].degree == 1);
  }
}

TEST_SUITE("compute_metrics") {
  TEST_CASE("mode selection follows the threshold and explicit flags") {
    MetricsOptions o;
    o.exact_threshold = 100;
    CHECK(choose_distance_mode(100, o).exact);
    CHECK_FALSE(choose_distance_mode(101, o).exact);
    CHECK(choose_distance_mode(101, o).sources == o.default_samples);
    o.force_exact = true;
    CHECK(choose_distance_mode(101, o).exact);
    o.sample_sources = 7;
    CHECK(choose_distance_mode(101, o).exact);  // --exact wins over --sample
    o.force_exact = false;
    o.sample_sources = 7;
    const auto m = choose_distance_mode(5, o);
    CHECK_FALSE(m.exact);
    CHECK(m.sources == 7);
  }

  TEST_CASE("bundles summary, distances, clustering and hubs") {
    const auto m = compute_metrics(chain({"a", "b", "c", "d"}));
    CHECK(m.summary.nodes == 4);
    CHECK(m.summary.links == 3);
    CHECK(m.summary.omega == 1);
    CHECK(m.distances.diameter == 3);
    CHECK(m.clustering.average == 0.0);
    CHECK(m.hubs.size() == 4);
  }
}
