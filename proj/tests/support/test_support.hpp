#pragma once

// Reference implementations and data generators shared by the unit and
// acceptance tests. Nothing here calls into the library's algorithms: the
// oracles are deliberately naive so they can be trusted by inspection.

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "cooc/graph.hpp"

namespace cooc::test {

// Dense symmetric weight matrix; 0 means "no edge".
struct DenseGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> w;  // row-major n*n

  std::uint64_t at(std::size_t i, std::size_t j) const { return w[i * n + j]; }
  bool adjacent(std::size_t i, std::size_t j) const { return at(i, j) != 0; }
  std::size_t degree(std::size_t i) const;
  std::uint64_t max_weight() const;
};

// Random graph with nodes "v0".."v{n-1}" interned in order, so NodeId == index.
// Each selected pair is stored as one or two directed links with random
// weights; the dense matrix holds the merged (summed) weights.
struct RandomGraph {
  WeightedDigraph graph;
  DenseGraph dense;
};

RandomGraph random_graph(std::mt19937_64& rng, std::size_t n, double edge_probability,
                         std::uint64_t max_link_weight);

inline constexpr int kInf = std::numeric_limits<int>::max();

// All-pairs hop distances, kInf when unreachable.
std::vector<std::vector<int>> floyd_warshall(const DenseGraph& g);

struct DistanceOracle {
  std::vector<std::size_t> component;  // largest component, ascending ids
  double average_path_length = 0.0;
  int diameter = 0;
  std::vector<double> per_node;  // aligned with component
};

// L, D and d_i over the largest component (ties: the one holding the smaller
// id), computed straight from the Floyd-Warshall matrix.
DistanceOracle distance_oracle(const DenseGraph& g);

// Weighted clustering of node i by enumerating every ordered neighbour pair
// and evaluating the cube-root term with max-normalised weights.
double clustering_oracle(const DenseGraph& g, std::size_t i);

// 2 T_i / (k_i (k_i - 1)) by counting triangles, ignoring weights.
double triangle_clustering_oracle(const DenseGraph& g, std::size_t i);

// Hurwitz zeta by long-double direct summation of `terms` terms plus the
// integral remainder.
double brute_zeta(double s, double q, std::size_t terms = 200'000);

// Inverse-CDF sampler for the discrete power law p(x) ∝ x^-alpha, x >= x_min.
// The CDF is tabulated exactly up to `table_limit`; beyond it the tail is
// drawn from the continuous approximation, which carries negligible mass.
class PowerLawSampler {
 public:
  PowerLawSampler(double alpha, std::uint64_t x_min, std::uint64_t table_limit = 1'000'000);
  std::uint64_t operator()(std::mt19937_64& rng) const;

 private:
  double alpha_;
  std::uint64_t x_min_;
  std::vector<double> cdf_;  // cdf_[i] = P(X <= x_min + i)
};

// Whitespace-separated word, base-26 encoded from a rank ("a", "b", ..., "ba").
std::string rank_word(std::size_t rank);

// Synthetic text of about `tokens` words drawn from a Zipf law over
// `vocabulary` types, split into sentences of 5..25 words ending in '.'.
std::string zipf_text(std::mt19937_64& rng, std::size_t tokens, std::size_t vocabulary,
                      double exponent = 1.0);

}  // namespace cooc::test
