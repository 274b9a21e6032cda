#include "cooc/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cooc/error.hpp"

namespace cooc {
namespace {

enum class Measure { nodes, links, path_length, diameter, clustering, omega };

struct RowSpec {
  const char* label;
  Measure measure;
};

constexpr RowSpec kRows[] = {{"N", Measure::nodes},         {"K", Measure::links},
                             {"L", Measure::path_length},   {"D", Measure::diameter},
                             {"C", Measure::clustering},    {"ω", Measure::omega}};

std::string format_cell(const CellRecord* record, Measure measure) {
  if (!record || !record->ok()) return std::string(kMissingCell);
  const auto& r = *record->result;
  char buf[32];
  switch (measure) {
    case Measure::nodes: return std::to_string(r.summary.nodes);
    case Measure::links: return std::to_string(r.summary.links);
    case Measure::diameter: return std::to_string(r.diameter);
    case Measure::omega: return std::to_string(r.summary.omega);
    case Measure::path_length:
      std::snprintf(buf, sizeof buf, "%.2f", r.average_path_length);
      return buf;
    case Measure::clustering:
      std::snprintf(buf, sizeof buf, "%.2f", r.clustering);
      return buf;
  }
  return std::string(kMissingCell);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string render_measure_table(const ExperimentReport& report, std::string_view part) {
  std::ostringstream out;
  out << "measure";
  for (const auto n : report.windows) out << "\tm_" << n;
  out << '\n';
  for (const auto& row : kRows) {
    for (const bool with_stopwords : {true, false}) {
      out << row.label << (with_stopwords ? "_sw" : "");
      for (const auto n : report.windows) {
        out << '\t' << format_cell(report.find(part, n, with_stopwords), row.measure);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string render_hub_table(const ExperimentReport& report, std::string_view part) {
  if (report.windows.empty()) return {};
  const auto [lo, hi] = std::minmax_element(report.windows.begin(), report.windows.end());
  struct Group {
    bool with_stopwords;
    std::size_t window;
  };
  const Group groups[] = {{true, *lo}, {true, *hi}, {false, *lo}, {false, *hi}};

  std::size_t rows = 0;
  for (const auto& g : groups) {
    if (const auto* r = report.find(part, g.window, g.with_stopwords); r && r->ok()) {
      rows = std::max(rows, r->result->hubs.size());
    }
  }

  std::ostringstream out;
  out << "rank";
  for (const auto& g : groups) {
    const std::string prefix =
        std::string(g.with_stopwords ? "sw" : "nosw") + "_m" + std::to_string(g.window);
    out << '\t' << prefix << "_word\t" << prefix << "_degree";
  }
  out << '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    out << i + 1;
    for (const auto& g : groups) {
      const auto* r = report.find(part, g.window, g.with_stopwords);
      if (r && r->ok() && i < r->result->hubs.size()) {
        out << '\t' << r->result->hubs[i].word << '\t' << r->result->hubs[i].degree;
      } else {
        out << '\t' << kMissingCell << '\t' << kMissingCell;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::optional<double> MeasureTable::at(std::string_view row, std::size_t window) const {
  const auto r = std::find(rows.begin(), rows.end(), row);
  const auto c = std::find(windows.begin(), windows.end(), window);
  if (r == rows.end() || c == windows.end()) throw ConfigError("no such table cell");
  return cells[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - windows.begin())];
}

MeasureTable parse_measure_table(std::string_view tsv) {
  MeasureTable table;
  bool header = true;
  for (const auto line : split(tsv, '\n')) {
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (header) {
      if (fields.empty() || fields[0] != "measure") throw IoError("measure table: bad header");
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].substr(0, 2) != "m_") throw IoError("measure table: bad column name");
        table.windows.push_back(std::stoul(std::string(fields[i].substr(2))));
      }
      header = false;
      continue;
    }
    if (fields.size() != table.windows.size() + 1) throw IoError("measure table: ragged row");
    table.rows.emplace_back(fields[0]);
    auto& cells = table.cells.emplace_back();
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i] == kMissingCell) {
        cells.emplace_back(std::nullopt);
      } else {
        cells.emplace_back(std::stod(std::string(fields[i])));
      }
    }
  }
  return table;
}

}  // namespace cooc
