#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sutra/detail/run_builder.hpp"
#include "sutra/error.hpp"
#include "sutra/numeral.hpp"
#include "sutra/trace.hpp"
#include "sutra/vedic.hpp"

namespace sutra {

// Schoolbook long multiplication. Operands keep their own lengths: one partial
// product row per digit of b, then a column addition of the shifted rows.
inline MethodRun longMultiply(const DigitString& a, const DigitString& b) {
  using namespace detail;
  const std::size_t p = a.size();
  const std::size_t q = b.size();

  GridSpec layout;
  layout.cols = p + q;
  std::size_t rowResult = 0;
  if (q == 1) {
    layout.rows = 3;
    layout.blocks = {{BlockKind::OperandRow, 0, 2, "operands"}, {BlockKind::ResultRow, 2, 3, "product"}};
    rowResult = 2;
  } else {
    layout.rows = 3 + q;
    layout.blocks = {{BlockKind::OperandRow, 0, 2, "operands"},
                     {BlockKind::WorkRow, 2, 2 + q, "partial products"},
                     {BlockKind::ResultRow, 2 + q, 3 + q, "product"}};
    rowResult = 2 + q;
  }
  auto partialRow = [&](std::size_t j) { return q == 1 ? rowResult : 2 + j; };

  RunBuilder run(Pane::Traditional, layout);
  const GridSpec& g = run.layout();

  // partial[j][place] = digit written in partial row j, if any
  std::vector<std::vector<int>> partial(q, std::vector<int>(p + q, -1));

  for (std::size_t j = 0; j < q; ++j) {
    run.step("");
    if (j == 0) {
      run.writeNumber(0, a);
      run.writeNumber(1, b);
    }
    run.highlight(1, g.placeCol(j));
    const unsigned m = b.at(j);
    ExactValue carry = 0;
    std::string rowText;
    for (std::size_t i = 0; i < p; ++i) {
      run.multiplyDigits(a.at(i), m);
      ExactValue v = a.at(i) * m;
      if (carry != 0) {
        run.add({v, carry});
        v += carry;
      }
      const unsigned digit = static_cast<unsigned>(v % 10);
      carry = v / 10;
      run.write(partialRow(j), g.placeCol(i + j), std::to_string(digit));
      partial[j][i + j] = static_cast<int>(digit);
      rowText.insert(rowText.begin(), static_cast<char>('0' + digit));
    }
    if (carry != 0) {
      run.write(partialRow(j), g.placeCol(p + j), carry.str());
      run.carry(carry, g.placeCol(p + j));
      partial[j][p + j] = static_cast<int>(carry);
      rowText.insert(0, carry.str());
    }
    std::string desc = "Multiply " + a.str() + " by " + std::to_string(m) + ", the " + placeName(j) +
                       " digit of " + b.str() + ": " + rowText;
    if (j > 0) desc += ", written " + plural(j, "place") + " to the left";
    run.current().description = desc + ".";
  }

  std::vector<std::uint8_t> answer;
  if (q == 1) {
    for (std::size_t k = 0; k < p + q; ++k) {
      if (partial[0][k] >= 0) answer.push_back(static_cast<std::uint8_t>(partial[0][k]));
    }
    return run.finish(digitsFrom(answer));
  }

  std::size_t top = 0;
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < p + q; ++k) {
      if (partial[j][k] >= 0) top = std::max(top, k);
    }
  }

  ExactValue carry = 0;
  for (std::size_t k = 0; k <= top; ++k) {
    run.step("");
    std::vector<ExactValue> terms;
    for (std::size_t j = 0; j < q; ++j) {
      if (partial[j][k] < 0) continue;
      run.highlight(partialRow(j), g.placeCol(k));
      terms.emplace_back(partial[j][k]);
    }
    if (carry != 0) terms.push_back(carry);
    ExactValue total = 0;
    for (const auto& t : terms) total += t;
    if (terms.size() > 1) run.add(terms);
    const unsigned digit = static_cast<unsigned>(total % 10);
    carry = total / 10;
    run.write(rowResult, g.placeCol(k), std::to_string(digit));
    if (carry != 0) run.carry(carry, g.placeCol(k + 1));
    answer.push_back(static_cast<std::uint8_t>(digit));
    std::string desc = "Add the " + placeName(k) + " column of the partial products: ";
    desc += terms.size() > 1 ? joinValues(terms, "+") + " = " + total.str() : total.str();
    run.current().description = desc + ". " + carryPhrase(digit, carry);
  }
  if (carry != 0) {
    if (top + 1 >= p + q || carry >= 10) throw InternalConsistencyError("long multiplication overflowed its grid");
    run.step("Write the final carry " + carry.str() + " in the " + placeName(top + 1) + " column.");
    run.write(rowResult, g.placeCol(top + 1), carry.str());
    answer.push_back(static_cast<std::uint8_t>(carry));
  }
  return run.finish(digitsFrom(answer));
}

// Right-to-left column addition, carries written above the next column.
inline MethodRun columnAdd(std::span<const DigitString> operands) {
  using namespace detail;
  if (operands.size() < 2 || operands.size() > kMaxAddends) {
    throw ArityError(operands.size(), 2, kMaxAddends);
  }
  std::size_t width = 0;
  for (const auto& o : operands) width = std::max(width, o.size());
  const std::size_t count = operands.size();

  GridSpec layout;
  layout.rows = count + 2;
  layout.cols = width + 1;
  layout.blocks = {{BlockKind::WorkRow, 0, 1, "carries"},
                   {BlockKind::OperandRow, 1, count + 1, "addends"},
                   {BlockKind::ResultRow, count + 1, count + 2, "sum"}};
  constexpr std::size_t kRowCarries = 0;
  const std::size_t rowResult = count + 1;

  RunBuilder run(Pane::Traditional, layout);
  const GridSpec& g = run.layout();
  std::vector<std::uint8_t> answer;
  ExactValue carry = 0;

  for (std::size_t k = 0; k < width; ++k) {
    run.step("");
    std::vector<ExactValue> terms;
    if (carry != 0) {
      terms.push_back(carry);
      run.highlight(kRowCarries, g.placeCol(k));
    }
    for (std::size_t r = 0; r < count; ++r) {
      if (k == 0) run.writeNumber(1 + r, operands[r]);
      if (k < operands[r].size()) {
        run.highlight(1 + r, g.placeCol(k));
        terms.emplace_back(operands[r].at(k));
      }
    }
    ExactValue total = 0;
    for (const auto& t : terms) total += t;
    if (terms.size() > 1) run.add(terms);
    const unsigned digit = static_cast<unsigned>(total % 10);
    carry = total / 10;
    run.write(rowResult, g.placeCol(k), std::to_string(digit));
    std::string desc = "Add the " + placeName(k) + " column: ";
    desc += terms.size() > 1 ? joinValues(terms, "+") + " = " + total.str() : total.str();
    desc += ". Write " + std::to_string(digit);
    if (carry != 0) {
      run.write(kRowCarries, g.placeCol(k + 1), carry.str());
      run.carry(carry, g.placeCol(k + 1));
      desc += " and carry " + carry.str() + " to the " + placeName(k + 1) + " column";
    }
    run.current().description = desc + ".";
    answer.push_back(static_cast<std::uint8_t>(digit));
  }
  if (carry != 0) {
    if (carry >= 10) throw InternalConsistencyError("closing carry exceeds one digit");
    run.step("Bring the carry " + carry.str() + " down into the " + placeName(width) + " column.");
    run.highlight(kRowCarries, g.placeCol(width));
    run.write(rowResult, g.placeCol(width), carry.str());
    answer.push_back(static_cast<std::uint8_t>(carry));
  }
  return run.finish(digitsFrom(answer));
}

// Digit-pair long division square root: bring down a pair, find the largest
// t with (20·p + t)·t not above the current dividend, p the root so far.
inline SqrtRun longDivisionSqrt(const DigitString& x) {
  using namespace detail;
  const DigitString number = normalize(x);
  const std::string text = number.str();
  const std::size_t len = text.size();
  const std::size_t groups = (len + 1) / 2;
  const std::size_t leadLen = len % 2 == 1 ? 1 : 2;

  GridSpec layout;
  layout.rows = 6;
  layout.cols = len;
  layout.blocks = {{BlockKind::OperandRow, 0, 1, "number"},
                   {BlockKind::WorkRow, 1, 2, "dividends"},
                   {BlockKind::WorkRow, 2, 3, "subtrahends"},
                   {BlockKind::WorkRow, 3, 4, "remainders"},
                   {BlockKind::ResultRow, 4, 5, "root"},
                   {BlockKind::WorkRow, 5, 6, "final remainder"}};
  constexpr std::size_t kRowNumber = 0, kRowDividend = 1, kRowSub = 2, kRowRem = 3, kRowRoot = 4, kRowFinal = 5;

  RunBuilder run(Pane::Traditional, layout);
  ExactValue rootSoFar = 0;
  ExactValue rem = 0;
  std::vector<std::uint8_t> rootMsb;

  for (std::size_t i = 0; i < groups; ++i) {
    const std::size_t first = i == 0 ? 0 : leadLen + 2 * (i - 1);
    const std::size_t last = i == 0 ? leadLen - 1 : first + 1;
    const unsigned group = static_cast<unsigned>(std::stoul(text.substr(first, last - first + 1)));

    run.step("");
    if (i == 0) run.writeNumber(kRowNumber, number);
    for (std::size_t c = first; c <= last; ++c) run.highlight(kRowNumber, c);

    ExactValue current = group;
    if (i > 0) {
      current = rem * 100 + group;
      run.op({"100" + times() + rem.str() + "+" + std::to_string(group), {100, rem, group}, current});
      run.tally().digitAdditions += 1;
    }

    auto trialOp = [&](unsigned t) {
      const ExactValue value = (rootSoFar * 20 + t) * t;
      BasicOp o{"(20" + times() + rootSoFar.str() + "+" + std::to_string(t) + ")" + times() + std::to_string(t),
                {20, rootSoFar, t, t},
                value};
      run.op(std::move(o));
      run.tally().digitAdditions += 1;
      return value;
    };

    unsigned t = 0;
    while (t < 9 && (rootSoFar * 20 + t + 1) * (t + 1) <= current) ++t;
    const ExactValue subtrahend = trialOp(t);
    if (t < 9) trialOp(t + 1);
    run.op(difference({current, subtrahend}));
    const ExactValue next = current - subtrahend;

    run.write(kRowDividend, last, current.str());
    run.write(kRowSub, last, subtrahend.str());
    run.write(kRowRem, last, next.str());
    run.write(kRowRoot, i, std::to_string(t));

    std::string desc = i == 0 ? "Take the leading group " + std::to_string(group)
                              : "Bring down the pair " + text.substr(first, 2) + " beside remainder " + rem.str() +
                                    " to get " + current.str();
    desc += ". The largest digit t with (20" + times() + rootSoFar.str() + "+t)" + times() + "t not above " +
            current.str() + " is " + std::to_string(t) + ", giving " + subtrahend.str() + "; remainder " +
            next.str() + ".";
    run.current().description = desc;

    rem = next;
    rootSoFar = rootSoFar * 10 + t;
    rootMsb.push_back(static_cast<std::uint8_t>(t));
  }
  run.write(kRowFinal, 0, rem.str());

  std::vector<std::uint8_t> rootLsb(rootMsb.rbegin(), rootMsb.rend());
  DigitString root = digitsFrom(rootLsb);
  MethodRun methodRun = run.finish(root, rem);
  return {std::move(methodRun), std::move(root), rem};
}

// Right-to-left subtraction with borrows recorded as borrow notes.
inline MethodRun borrowSubtract(const DigitString& a, const DigitString& b) {
  using namespace detail;
  if (compareDigits(a, b) < 0) throw NegativeResultError(negativeResultWarning(a.str(), b.str()));
  const std::size_t w = std::max(a.size(), b.size());

  GridSpec layout;
  layout.rows = 3;
  layout.cols = w;
  layout.blocks = {{BlockKind::OperandRow, 0, 2, "operands"}, {BlockKind::ResultRow, 2, 3, "difference"}};
  RunBuilder run(Pane::Traditional, layout);
  const GridSpec& g = run.layout();

  std::vector<std::uint8_t> answer;
  unsigned borrow = 0;
  for (std::size_t k = 0; k < w; ++k) {
    run.step("");
    if (k == 0) {
      run.writeNumber(0, a);
      run.writeNumber(1, b);
    }
    if (k < a.size()) run.highlight(0, g.placeCol(k));
    if (k < b.size()) run.highlight(1, g.placeCol(k));
    const unsigned top = a.at(k);
    const unsigned bottom = b.at(k);

    std::vector<ExactValue> terms{top};
    if (borrow) terms.emplace_back(borrow);
    terms.emplace_back(bottom);

    std::string desc = "Subtract in the " + placeName(k) + " column: ";
    unsigned digit = 0;
    unsigned borrowOut = 0;
    if (top >= borrow + bottom) {
      BasicOp o = difference(terms);
      digit = static_cast<unsigned>(o.result);
      desc += o.expression + " = " + o.result.str() + ".";
      run.op(std::move(o));
    } else {
      // 10 + top − borrow − bottom
      std::string expression = "10+" + std::to_string(top);
      std::vector<ExactValue> literals{10, top};
      if (borrow) {
        expression += minus() + "1";
        literals.emplace_back(1);
      }
      expression += minus() + std::to_string(bottom);
      literals.emplace_back(bottom);
      digit = 10 + top - borrow - bottom;
      run.op({expression, literals, digit});
      run.tally().digitAdditions += 1;
      borrowOut = 1;
      run.carry(1, g.placeCol(k + 1), CarryKind::Borrow);
      desc += "too small, so borrow 1 from the " + placeName(k + 1) + " column: " + expression + " = " +
              std::to_string(digit) + ".";
    }
    run.write(2, g.placeCol(k), std::to_string(digit));
    answer.push_back(static_cast<std::uint8_t>(digit));
    run.current().description = desc + " Write " + std::to_string(digit) + ".";
    borrow = borrowOut;
  }
  if (borrow) throw InternalConsistencyError("borrow left over after the last column");
  return run.finish(digitsFrom(answer));
}

}  // namespace sutra
