#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sutra/error.hpp"
#include "sutra/expression.hpp"
#include "sutra/numeral.hpp"

namespace sutra {

enum class Pane { Traditional, Vedic };

inline std::string_view toString(Pane p) { return p == Pane::Vedic ? "vedic" : "traditional"; }

// A grid cell in one pane. Columns are display columns, left to right, so the
// most significant place of a right-aligned number sits at the smallest column.
struct CellRef {
  Pane pane = Pane::Vedic;
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const CellRef&, const CellRef&) = default;
};

enum class BlockKind { OperandRow, WorkRow, ResultRow, Guide };

inline std::string_view toString(BlockKind k) {
  switch (k) {
    case BlockKind::OperandRow: return "operand-row";
    case BlockKind::WorkRow: return "work-row";
    case BlockKind::ResultRow: return "result-row";
    case BlockKind::Guide: return "guide";
  }
  return "guide";
}

// Rows [rowBegin, rowEnd) of a grid with a shared role.
struct Block {
  BlockKind kind = BlockKind::WorkRow;
  std::size_t rowBegin = 0;
  std::size_t rowEnd = 0;
  std::string label;

  friend bool operator==(const Block&, const Block&) = default;
};

struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Block> blocks;

  // Display column of place value k for a number right-aligned in the grid.
  std::size_t placeCol(std::size_t place) const { return cols - 1 - place; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Empty string when the layout is well formed, otherwise the first problem.
inline std::string checkGridSpec(const GridSpec& g) {
  if (g.rows == 0 || g.cols == 0) return "grid has no cells";
  std::vector<bool> used(g.rows, false);
  std::size_t results = 0;
  for (const auto& b : g.blocks) {
    if (b.rowBegin >= b.rowEnd || b.rowEnd > g.rows) return "block '" + b.label + "' rows out of bounds";
    for (std::size_t r = b.rowBegin; r < b.rowEnd; ++r) {
      if (used[r]) return "block '" + b.label + "' overlaps another block";
      used[r] = true;
    }
    if (b.kind == BlockKind::ResultRow) {
      if (b.rowEnd - b.rowBegin != 1) return "result block must be a single row";
      ++results;
    }
  }
  if (results != 1) return "grid needs exactly one result row";
  return {};
}

inline const Block& resultBlock(const GridSpec& g) {
  for (const auto& b : g.blocks) {
    if (b.kind == BlockKind::ResultRow) return b;
  }
  throw InternalConsistencyError("grid has no result row");
}

// One latent elementary calculation. `operands` lists the literals of
// `expression` in order of appearance.
struct BasicOp {
  std::string expression;
  std::vector<ExactValue> operands;
  ExactValue result;

  friend bool operator==(const BasicOp&, const BasicOp&) = default;
};

struct CellWrite {
  CellRef cell;
  std::string token;

  friend bool operator==(const CellWrite&, const CellWrite&) = default;
};

// Carries move value to a higher place; borrows take it from one.
enum class CarryKind { Carry, Borrow };

inline std::string_view toString(CarryKind k) { return k == CarryKind::Carry ? "carry" : "borrow"; }

struct CarryNote {
  ExactValue value;
  std::size_t targetCol = 0;
  CarryKind kind = CarryKind::Carry;

  friend bool operator==(const CarryNote&, const CarryNote&) = default;
};

struct MainStep {
  std::size_t index = 0;
  std::string description;
  std::vector<CellRef> highlights;
  std::vector<CellWrite> writes;
  std::vector<BasicOp> subOps;
  std::optional<CarryNote> carryNote;

  friend bool operator==(const MainStep&, const MainStep&) = default;
};

// Operation counts derived from a step list. The counting rules:
//   digitMultiplications  sub-operations of the exact form "<digit>×<digit>"
//   digitAdditions        '+' operators over all sub-operation expressions
//   carries               steps whose carry or borrow note moves a non-zero value
struct Metrics {
  std::size_t digitMultiplications = 0;
  std::size_t digitAdditions = 0;
  std::size_t carries = 0;
  std::size_t mainSteps = 0;
  std::size_t basicOps = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

inline Metrics recomputeMetrics(const std::vector<MainStep>& steps) {
  Metrics m;
  m.mainSteps = steps.size();
  for (const auto& s : steps) {
    m.basicOps += s.subOps.size();
    if (s.carryNote && s.carryNote->value != 0) ++m.carries;
    for (const auto& op : s.subOps) {
      if (expr::isDigitProduct(op.expression)) ++m.digitMultiplications;
      m.digitAdditions += expr::countAdditions(op.expression);
    }
  }
  return m;
}

// Which pane's latent operations the player shows.
enum class LatentDisplay { Vedic, Both, None };

inline std::string_view toString(LatentDisplay d) {
  switch (d) {
    case LatentDisplay::Vedic: return "vedic";
    case LatentDisplay::Both: return "both";
    case LatentDisplay::None: return "none";
  }
  return "vedic";
}

inline std::optional<LatentDisplay> parseLatentDisplay(std::string_view s) {
  if (s == "vedic") return LatentDisplay::Vedic;
  if (s == "both") return LatentDisplay::Both;
  if (s == "none") return LatentDisplay::None;
  return std::nullopt;
}

// Raw output of one method implementation.
struct MethodRun {
  Pane pane = Pane::Vedic;
  GridSpec layout;
  std::vector<MainStep> steps;
  DigitString result;
  std::optional<ExactValue> remainder;  // square roots only
  Metrics metrics;
};

struct Trace {
  std::string methodId;
  std::vector<DigitString> operands;
  std::map<Pane, GridSpec> layouts;
  std::vector<MainStep> steps;
  DigitString result;
  std::optional<ExactValue> remainder;
  Metrics metrics;
  LatentDisplay latentDisplay = LatentDisplay::Vedic;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Replay ----------------------------------------------------------------------

using Grid = std::vector<std::vector<std::optional<std::string>>>;
using GridState = std::map<Pane, Grid>;

namespace detail {

inline bool isDigitToken(std::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline std::string checkBasicOp(const BasicOp& op) {
  auto value = expr::evaluate(op.expression);
  if (!value) return "sub-operation '" + op.expression + "' is not a valid expression";
  if (*value != op.result) {
    return "sub-operation '" + op.expression + "' evaluates to " + value->str() + ", recorded " +
           op.result.str();
  }
  auto lits = expr::literals(op.expression);
  if (!lits || *lits != op.operands) return "sub-operation '" + op.expression + "' operands disagree";
  return {};
}

}  // namespace detail

// Applies the writes of the first `count` steps to empty grids. Throws
// ReplayError on structural violations; does not check the result row.
inline GridState applySteps(const std::map<Pane, GridSpec>& layouts, const std::vector<MainStep>& steps,
                            std::size_t count) {
  GridState grids;
  for (const auto& [pane, spec] : layouts) {
    if (auto problem = checkGridSpec(spec); !problem.empty()) {
      throw ReplayError(0, std::string(toString(pane)) + " layout: " + problem);
    }
    grids[pane] = Grid(spec.rows, std::vector<std::optional<std::string>>(spec.cols));
  }
  std::size_t maxCols = 0;
  for (const auto& [pane, spec] : layouts) maxCols = std::max(maxCols, spec.cols);

  auto inBounds = [&](const CellRef& c) {
    auto it = layouts.find(c.pane);
    return it != layouts.end() && c.row < it->second.rows && c.col < it->second.cols;
  };

  count = std::min(count, steps.size());
  for (std::size_t s = 0; s < count; ++s) {
    const MainStep& step = steps[s];
    if (s > 0 && step.index <= steps[s - 1].index) throw ReplayError(step.index, "step index not increasing");
    for (const auto& h : step.highlights) {
      if (!inBounds(h)) throw ReplayError(step.index, "highlight outside the grid");
    }
    for (const auto& w : step.writes) {
      if (!inBounds(w.cell)) throw ReplayError(step.index, "write outside the grid");
      if (!detail::isDigitToken(w.token)) throw ReplayError(step.index, "write token '" + w.token + "' is not a digit string");
      auto& cell = grids[w.cell.pane][w.cell.row][w.cell.col];
      if (cell) {
        throw ReplayError(step.index, "cell (" + std::to_string(w.cell.row) + "," + std::to_string(w.cell.col) +
                                          ") written twice");
      }
      cell = w.token;
    }
    for (const auto& op : step.subOps) {
      if (auto problem = detail::checkBasicOp(op); !problem.empty()) throw ReplayError(step.index, problem);
    }
    if (step.carryNote && step.carryNote->targetCol >= maxCols) {
      throw ReplayError(step.index, "carry targets a column outside the grid");
    }
  }
  return grids;
}

// Reads a pane's result row left to right, skipping empty cells.
inline std::string readResultRow(const GridSpec& spec, const Grid& grid) {
  std::string text;
  for (const auto& cell : grid[resultBlock(spec).rowBegin]) {
    if (cell) text += *cell;
  }
  return text;
}

inline GridState replay(const std::map<Pane, GridSpec>& layouts, const std::vector<MainStep>& steps,
                        const DigitString& result) {
  GridState grids = applySteps(layouts, steps, steps.size());
  const std::size_t last = steps.empty() ? 0 : steps.back().index;
  const ExactValue expected = valueOf(result);
  for (const auto& [pane, spec] : layouts) {
    std::string text = readResultRow(spec, grids[pane]);
    if (text.empty()) throw ReplayError(last, std::string(toString(pane)) + " result row is empty");
    if (valueOf(parseOperand(text)) != expected) {
      throw ReplayError(last, std::string(toString(pane)) + " result row reads " + text + ", expected " +
                                  result.str());
    }
  }
  return grids;
}

inline GridState replay(const Trace& t) { return replay(t.layouts, t.steps, t.result); }

inline GridState replay(const MethodRun& run) { return replay({{run.pane, run.layout}}, run.steps, run.result); }

// The stream of latent operations in step order.
inline std::vector<BasicOp> flattenBasicOps(const Trace& t) {
  std::vector<BasicOp> out;
  for (const auto& s : t.steps) out.insert(out.end(), s.subOps.begin(), s.subOps.end());
  return out;
}

}  // namespace sutra
