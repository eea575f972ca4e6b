#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sutra/expression.hpp"
#include "sutra/numeral.hpp"
#include "sutra/trace.hpp"

namespace sutra::detail {

// Latent operation constructors. Each computes its own result; replay later
// re-derives it from the expression text.

inline BasicOp product(const ExactValue& a, const ExactValue& b) {
  return {a.str() + std::string(expr::kTimes) + b.str(), {a, b}, a * b};
}

inline BasicOp sum(const std::vector<ExactValue>& terms) {
  BasicOp op;
  ExactValue total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) op.expression += "+";
    op.expression += terms[i].str();
    total += terms[i];
  }
  op.operands = terms;
  op.result = total;
  return op;
}

inline BasicOp difference(const std::vector<ExactValue>& terms) {
  BasicOp op;
  ExactValue total = terms.empty() ? ExactValue(0) : terms.front();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) {
      op.expression += expr::kMinus;
      total -= terms[i];
    }
    op.expression += terms[i].str();
  }
  op.operands = terms;
  op.result = total;
  return op;
}

// floor(a / b), b > 0
inline BasicOp quotient(const ExactValue& a, const ExactValue& b) {
  return {a.str() + std::string(expr::kDivide) + b.str(), {a, b}, a / b};
}

inline std::string joinValues(const std::vector<ExactValue>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

// Accumulates MainSteps for one pane and keeps the method's own operation
// tally, which the engine later checks against the steps.
class RunBuilder {
 public:
  RunBuilder(Pane pane, GridSpec layout) : pane_(pane), layout_(std::move(layout)) {}

  const GridSpec& layout() const { return layout_; }

  MainStep& step(std::string description) {
    MainStep s;
    s.index = steps_.size();
    s.description = std::move(description);
    steps_.push_back(std::move(s));
    ++tally_.mainSteps;
    return steps_.back();
  }

  MainStep& current() { return steps_.back(); }

  void highlight(std::size_t row, std::size_t col) { current().highlights.push_back({pane_, row, col}); }

  void write(std::size_t row, std::size_t col, std::string token) {
    current().writes.push_back({{pane_, row, col}, std::move(token)});
  }

  // Writes a number right-aligned in `row`, one digit per column.
  void writeNumber(std::size_t row, const DigitString& d) {
    for (std::size_t k = d.size(); k-- > 0;) {
      write(row, layout_.placeCol(k), std::to_string(d.at(k)));
    }
  }

  void op(BasicOp o) {
    ++tally_.basicOps;
    current().subOps.push_back(std::move(o));
  }

  // Tallied variants: the method declares what kind of elementary work it did.
  void multiplyDigits(unsigned a, unsigned b) {
    ++tally_.digitMultiplications;
    op(product(a, b));
  }

  void add(const std::vector<ExactValue>& terms) {
    tally_.digitAdditions += terms.size() - 1;
    op(sum(terms));
  }

  void carry(const ExactValue& value, std::size_t targetCol, CarryKind kind = CarryKind::Carry) {
    current().carryNote = CarryNote{value, targetCol, kind};
    if (value != 0) ++tally_.carries;
  }

  Metrics& tally() { return tally_; }

  MethodRun finish(DigitString result, std::optional<ExactValue> remainder = std::nullopt) {
    MethodRun run;
    run.pane = pane_;
    run.layout = std::move(layout_);
    run.steps = std::move(steps_);
    run.result = std::move(result);
    run.remainder = std::move(remainder);
    run.metrics = tally_;
    return run;
  }

 private:
  Pane pane_;
  GridSpec layout_;
  std::vector<MainStep> steps_;
  Metrics tally_;
};

inline std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

}  // namespace sutra::detail
