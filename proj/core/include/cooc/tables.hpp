#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cooc/experiment.hpp"

namespace cooc {

/// Printed in place of a missing or failed cell.
inline constexpr std::string_view kMissingCell = "—";

/// Measures table for one corpus part: rows N_sw, N, K_sw, K, L_sw, L, D_sw,
/// D, C_sw, C, ω_sw, ω (the `sw` rows keep stopwords) and one column per
/// window size. Reals use two decimals, counts are integers.
std::string render_measure_table(const ExperimentReport& report, std::string_view part);

/// Top-ten hubs for one part, side by side for (stopwords kept, smallest n),
/// (kept, largest n), (removed, smallest n), (removed, largest n).
std::string render_hub_table(const ExperimentReport& report, std::string_view part);

struct MeasureTable {
  std::vector<std::size_t> windows;
  std::vector<std::string> rows;
  std::vector<std::vector<std::optional<double>>> cells;  // [row][window]

  std::optional<double> at(std::string_view row, std::size_t window) const;
};

/// Parses the output of render_measure_table.
MeasureTable parse_measure_table(std::string_view tsv);

}  // namespace cooc
