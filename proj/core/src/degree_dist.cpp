#include "cooc/degree_dist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "cooc/error.hpp"
#include "cooc/zeta.hpp"

namespace cooc {
namespace {

constexpr double kAlphaLow = 1.0 + 1e-6;
constexpr double kAlphaHigh = 20.0;
constexpr std::size_t kMinObservations = 10;

struct Histogram {
  std::vector<std::uint64_t> values;  // ascending distinct positive degrees
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> tail_count;  // observations >= values[j]
  std::vector<double> tail_log_sum;       // sum of ln k over those observations
  std::uint64_t total = 0;
};

Histogram histogram(const DegreeSequence& seq) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto d : seq.degrees) {
    if (d > 0) ++counts[d];
  }
  Histogram h;
  for (const auto& [value, count] : counts) {
    h.values.push_back(value);
    h.counts.push_back(count);
    h.total += count;
  }
  const std::size_t m = h.values.size();
  h.tail_count.assign(m + 1, 0);
  h.tail_log_sum.assign(m + 1, 0.0);
  for (std::size_t j = m; j-- > 0;) {
    h.tail_count[j] = h.tail_count[j + 1] + h.counts[j];
    h.tail_log_sum[j] =
        h.tail_log_sum[j + 1] + static_cast<double>(h.counts[j]) * std::log(static_cast<double>(h.values[j]));
  }
  return h;
}

std::size_t index_of(const Histogram& h, std::uint64_t x_min) {
  return static_cast<std::size_t>(std::lower_bound(h.values.begin(), h.values.end(), x_min) -
                                  h.values.begin());
}

double mle_from(const Histogram& h, std::size_t j, double x_min) {
  if (j + 1 >= h.values.size()) {
    throw FitError("tail at x_min needs at least two distinct values");
  }
  const double mean_log = h.tail_log_sum[j] / static_cast<double>(h.tail_count[j]);
  // Per-observation negative log-likelihood; convex in alpha.
  auto nll = [&](double alpha) { return std::log(hurwitz_zeta(alpha, x_min)) + alpha * mean_log; };
  const int bits = std::numeric_limits<double>::digits / 2;
  return boost::math::tools::brent_find_minima(nll, kAlphaLow, kAlphaHigh, bits).first;
}

double ks_from(const Histogram& h, std::size_t j, double alpha, std::uint64_t x_min) {
  const double norm = hurwitz_zeta(alpha, static_cast<double>(x_min));
  const double n_tail = static_cast<double>(h.tail_count[j]);
  double worst = 0.0;
  std::uint64_t cum = 0;
  std::uint64_t previous = x_min - 1;
  for (std::size_t t = j; t < h.values.size(); ++t) {
    const std::uint64_t value = h.values[t];
    const double v = static_cast<double>(value);
    if (value - 1 > previous) {
      // Just before this value the empirical CDF is still flat.
      const double fitted = 1.0 - hurwitz_zeta(alpha, v) / norm;
      worst = std::max(worst, std::abs(static_cast<double>(cum) / n_tail - fitted));
    }
    cum += h.counts[t];
    const double fitted = 1.0 - hurwitz_zeta(alpha, v + 1.0) / norm;
    worst = std::max(worst, std::abs(static_cast<double>(cum) / n_tail - fitted));
    previous = value;
  }
  return worst;
}

}  // namespace

DegreeSequence degree_sequence(const UndirectedView& view) {
  DegreeSequence seq;
  seq.degrees.reserve(view.node_count());
  for (NodeId i = 0; i < view.node_count(); ++i) seq.degrees.push_back(view.degree(i));
  return seq;
}

DegreeSequence degree_sequence(const WeightedDigraph& graph) {
  return degree_sequence(UndirectedView(graph));
}

double discrete_alpha_mle(const DegreeSequence& seq, std::uint64_t x_min) {
  if (x_min == 0) throw FitError("x_min must be positive");
  const auto h = histogram(seq);
  return mle_from(h, index_of(h, x_min), static_cast<double>(x_min));
}

double power_law_ks(const DegreeSequence& seq, double alpha, std::uint64_t x_min) {
  if (x_min == 0) throw FitError("x_min must be positive");
  const auto h = histogram(seq);
  const std::size_t j = index_of(h, x_min);
  if (j >= h.values.size()) throw FitError("no observations at or above x_min");
  return ks_from(h, j, alpha, x_min);
}

PowerLawFit fit_power_law(const DegreeSequence& seq) {
  const auto h = histogram(seq);
  if (h.total < kMinObservations) throw FitError("insufficient data");
  if (h.values.size() < 2) throw FitError("degenerate sequence");

  PowerLawFit best;
  bool found = false;
  for (std::size_t j = 0; j + 1 < h.values.size(); ++j) {
    // Keep at least 5% of the observations in the tail.
    if (h.tail_count[j] * 20 < h.total) break;
    const double alpha = mle_from(h, j, static_cast<double>(h.values[j]));
    const double ks = ks_from(h, j, alpha, h.values[j]);
    if (!found || ks < best.ks_statistic) {
      best = {alpha, h.values[j], ks, static_cast<std::size_t>(h.tail_count[j])};
      found = true;
    }
  }
  if (!found) throw FitError("degenerate sequence");
  return best;
}

std::vector<DistributionRow> emit_pdf_ccdf(const DegreeSequence& seq) {
  const auto h = histogram(seq);
  if (h.total == 0) throw FitError("no positive degrees");
  const double n = static_cast<double>(h.total);
  std::vector<DistributionRow> rows;
  rows.reserve(h.values.size());
  for (std::size_t j = 0; j < h.values.size(); ++j) {
    rows.push_back({h.values[j], static_cast<double>(h.counts[j]) / n,
                    static_cast<double>(h.tail_count[j]) / n});
  }
  return rows;
}

void write_distribution_tsv(std::span<const DistributionRow> rows, std::ostream& out) {
  out << "k\tpdf\tccdf\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.17g\t%.17g", row.pdf, row.ccdf);
    out << row.k << '\t' << buf << '\n';
  }
}

std::vector<DistributionRow> read_distribution_tsv(std::istream& in) {
  std::vector<DistributionRow> rows;
  std::string line;
  if (!std::getline(in, line) || line != "k\tpdf\tccdf") {
    throw IoError("distribution table: missing header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    DistributionRow row;
    if (!(fields >> row.k >> row.pdf >> row.ccdf)) {
      throw IoError("distribution table: malformed row '" + line + "'");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cooc
