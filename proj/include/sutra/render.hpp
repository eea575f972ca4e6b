#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "sutra/engine.hpp"
#include "sutra/trace.hpp"

// Plain-text rendering of traces for terminals.

namespace sutra::render {

inline constexpr std::size_t kMaxWidth = 120;

namespace detail {

// Display width of a UTF-8 string: counts code points, not bytes.
inline std::size_t displayWidth(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

inline std::vector<std::string> wrap(const std::string& text, std::size_t width) {
  std::vector<std::string> lines;
  std::istringstream words(text);
  std::string word, line;
  while (words >> word) {
    if (!line.empty() && displayWidth(line) + 1 + displayWidth(word) > width) {
      lines.push_back(line);
      line.clear();
    }
    line += (line.empty() ? "" : " ") + word;
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

inline std::string padLeft(const std::string& s, std::size_t width) {
  const std::size_t w = displayWidth(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

inline std::string padRight(const std::string& s, std::size_t width) {
  const std::size_t w = displayWidth(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

}  // namespace detail

// Grid rows with block labels on the left, most significant place leftmost.
// Grids wider than the terminal budget are split into column bands.
inline std::string renderGrid(const GridSpec& spec, const Grid& grid) {
  std::vector<std::string> labels(spec.rows);
  for (const auto& b : spec.blocks) labels[b.rowBegin] = b.label;
  std::size_t labelWidth = 0;
  for (const auto& l : labels) labelWidth = std::max(labelWidth, detail::displayWidth(l));
  std::size_t cellWidth = 1;
  for (const auto& row : grid) {
    for (const auto& cell : row) {
      if (cell) cellWidth = std::max(cellWidth, detail::displayWidth(*cell));
    }
  }
  const std::size_t prefix = labelWidth + 3;
  const std::size_t perBand = std::max<std::size_t>(1, (kMaxWidth - std::min(prefix, kMaxWidth - 2)) / (cellWidth + 1));

  std::ostringstream out;
  for (std::size_t start = 0; start < spec.cols; start += perBand) {
    const std::size_t stop = std::min(spec.cols, start + perBand);
    if (start > 0) out << "\n";
    for (std::size_t r = 0; r < spec.rows; ++r) {
      std::string line = detail::padRight(labels[r], labelWidth) + " |";
      for (std::size_t c = start; c < stop; ++c) {
        line += " " + detail::padLeft(grid[r][c].value_or("."), cellWidth);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }
  return out.str();
}

inline bool showsLatent(LatentDisplay display, Pane pane) {
  return display == LatentDisplay::Both || (display == LatentDisplay::Vedic && pane == Pane::Vedic);
}

inline std::string renderTrace(const Trace& t) {
  std::ostringstream out;
  std::string operands;
  for (std::size_t i = 0; i < t.operands.size(); ++i) operands += (i ? ", " : "") + t.operands[i].str();
  out << "method:   " << t.methodId << "\n";
  out << "operands: " << operands << "\n";

  const GridState grids = replay(t);
  for (const auto& [pane, spec] : t.layouts) {
    out << "\n[" << toString(pane) << "]\n" << renderGrid(spec, grids.at(pane));
  }

  const Pane pane = t.layouts.empty() ? Pane::Vedic : t.layouts.begin()->first;
  const bool latent = showsLatent(t.latentDisplay, pane);
  out << "\nsteps:\n";
  for (const auto& s : t.steps) {
    const std::string number = std::to_string(s.index + 1) + ". ";
    const std::string indent(number.size() + 2, ' ');
    auto lines = detail::wrap(s.description, kMaxWidth - indent.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << "  " << (i == 0 ? number : std::string(number.size(), ' ')) << lines[i] << "\n";
    }
    if (latent) {
      for (const auto& op : s.subOps) out << indent << "    " << op.expression << " = " << op.result.str() << "\n";
    }
  }
  out << "\nresult:    " << t.result.str() << "\n";
  if (t.remainder) out << "remainder: " << t.remainder->str() << "\n";
  return out.str();
}

inline std::string renderMetricsTable(const ComparisonReport& r) {
  struct Row {
    const char* name;
    std::size_t vedic, traditional;
  };
  const Metrics& v = r.vedic.metrics;
  const Metrics& t = r.traditional.metrics;
  const Row rows[] = {{"digitMultiplications", v.digitMultiplications, t.digitMultiplications},
                      {"digitAdditions", v.digitAdditions, t.digitAdditions},
                      {"carries", v.carries, t.carries},
                      {"mainSteps", v.mainSteps, t.mainSteps},
                      {"basicOps", v.basicOps, t.basicOps}};
  std::ostringstream out;
  out << detail::padRight("metric", 22) << detail::padLeft("vedic", 8) << detail::padLeft("traditional", 13)
      << detail::padLeft("delta", 8) << "\n";
  for (const auto& row : rows) {
    const long long delta = r.deltas.at(row.name);
    out << detail::padRight(row.name, 22) << detail::padLeft(std::to_string(row.vedic), 8)
        << detail::padLeft(std::to_string(row.traditional), 13)
        << detail::padLeft((delta > 0 ? "+" : "") + std::to_string(delta), 8) << "\n";
  }
  return out.str();
}

inline std::string renderComparison(const ComparisonReport& r) {
  std::ostringstream out;
  auto resultLine = [](const Trace& t) {
    std::string s = t.result.str();
    if (t.remainder) s += " remainder " + t.remainder->str();
    return s;
  };
  out << "vedic       " << r.vedic.methodId << ": " << resultLine(r.vedic) << "\n";
  out << "traditional " << r.traditional.methodId << ": " << resultLine(r.traditional) << "\n\n";
  out << renderMetricsTable(r);
  return out.str();
}

inline std::string renderMethodTable(const std::vector<MethodDescriptor>& methods) {
  std::size_t idWidth = 2;
  for (const auto& m : methods) idWidth = std::max(idWidth, m.id.size());
  std::ostringstream out;
  out << detail::padRight("id", idWidth + 2) << detail::padRight("operation", 11) << detail::padRight("family", 13)
      << "level\n";
  for (const auto& m : methods) {
    out << detail::padRight(m.id, idWidth + 2) << detail::padRight(std::string(toString(m.operation)), 11)
        << detail::padRight(std::string(toString(m.family)), 13) << m.level << "\n";
  }
  return out.str();
}

inline std::string renderDescriptor(const MethodDescriptor& d) {
  std::ostringstream out;
  out << d.displayName << " (" << d.id << ")\n";
  out << "operation: " << toString(d.operation) << ", family: " << toString(d.family) << ", level " << d.level
      << "\n\n";
  for (const auto& line : detail::wrap(d.infoText, 80)) out << line << "\n";
  out << "\nconstraints:\n";
  for (const auto& c : d.constraints) out << "  - " << c << "\n";
  return out.str();
}

}  // namespace sutra::render
