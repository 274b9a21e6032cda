#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "cooc/graph.hpp"

namespace cooc {

/// Undirected distinct-neighbor degree of every node, in node-id order.
/// Isolated nodes contribute zeros, which the fitter and the distribution
/// tables ignore.
struct DegreeSequence {
  std::vector<std::uint64_t> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
};

DegreeSequence degree_sequence(const UndirectedView& view);
DegreeSequence degree_sequence(const WeightedDigraph& graph);

struct PowerLawFit {
  double alpha = 0.0;
  std::uint64_t x_min = 0;
  double ks_statistic = 0.0;
  std::size_t n_tail = 0;
};

/// Discrete maximum-likelihood exponent for the observations >= x_min,
/// maximizing  -n ln zeta(alpha, x_min) - alpha * sum ln k.
/// Throws FitError when the tail has fewer than two distinct values.
double discrete_alpha_mle(const DegreeSequence& seq, std::uint64_t x_min);

/// Fits P(k) ~ k^-alpha over k >= x_min.
///
/// Every distinct positive degree that still leaves at least 5% of the
/// observations in its tail (and at least two distinct tail values) is tried
/// as x_min; alpha comes from discrete_alpha_mle and the x_min with the
/// smallest Kolmogorov-Smirnov distance wins, ties going to the smaller x_min.
///
/// Throws FitError("insufficient data") below 10 positive observations and
/// FitError("degenerate sequence") when all positive degrees are equal.
PowerLawFit fit_power_law(const DegreeSequence& seq);

/// KS distance between the empirical tail CDF and the fitted discrete power
/// law, taken over all integers k >= x_min.
double power_law_ks(const DegreeSequence& seq, double alpha, std::uint64_t x_min);

struct DistributionRow {
  std::uint64_t k = 0;
  double pdf = 0.0;   // p(X = k)
  double ccdf = 0.0;  // p(X >= k)
};

/// One row per observed positive degree, ascending. Throws FitError when no
/// degree is positive.
std::vector<DistributionRow> emit_pdf_ccdf(const DegreeSequence& seq);

/// `k<TAB>pdf<TAB>ccdf` with a header line; values are written with enough
/// digits to round-trip.
void write_distribution_tsv(std::span<const DistributionRow> rows, std::ostream& out);
std::vector<DistributionRow> read_distribution_tsv(std::istream& in);

}  // namespace cooc
