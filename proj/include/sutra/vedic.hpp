#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sutra/detail/run_builder.hpp"
#include "sutra/error.hpp"
#include "sutra/numeral.hpp"
#include "sutra/trace.hpp"

namespace sutra {

// Upper bound on addends, set by the width of the player's grid.
inline constexpr std::size_t kMaxAddends = 10;

namespace detail {

inline std::string placeName(std::size_t k) {
  static const char* names[] = {"units",         "tens",          "hundreds",
                                "thousands",     "ten-thousands", "hundred-thousands",
                                "millions"};
  if (k < std::size(names)) return names[k];
  return "10^" + std::to_string(k);
}

inline std::string times() { return std::string(expr::kTimes); }
inline std::string minus() { return std::string(expr::kMinus); }

// Digit-wise comparison of the values of two digit strings: -1, 0 or 1.
inline int compareDigits(const DigitString& a, const DigitString& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = n; k-- > 0;) {
    if (a.at(k) != b.at(k)) return a.at(k) < b.at(k) ? -1 : 1;
  }
  return 0;
}

inline std::string carryPhrase(unsigned digit, const ExactValue& carry) {
  std::string s = "Write " + std::to_string(digit);
  if (carry != 0) s += ", carry " + carry.str();
  return s + ".";
}

inline DigitString digitsFrom(const std::vector<std::uint8_t>& lsbFirst) {
  return DigitString(lsbFirst.empty() ? std::vector<std::uint8_t>{0} : lsbFirst);
}

}  // namespace detail

// Urdhva-Tiryagbhyam ("vertically and crosswise") ------------------------------
//
// Both operands are padded with leading zeros to a common length n. Column k of
// the answer is the sum of the products a_i·b_j with i+j = k plus the carry
// from column k-1; there are 2n-1 columns and an optional closing carry step.
inline MethodRun crissCrossMultiply(const DigitString& a, const DigitString& b) {
  using namespace detail;
  const std::size_t n = std::max(a.size(), b.size());
  const DigitString pa = padToLength(a, n);
  const DigitString pb = padToLength(b, n);

  GridSpec layout;
  layout.rows = 4;
  layout.cols = 2 * n;
  layout.blocks = {{BlockKind::OperandRow, 0, 2, "operands"},
                   {BlockKind::Guide, 2, 3, "crosswise pattern"},
                   {BlockKind::ResultRow, 3, 4, "product"}};
  constexpr std::size_t kRowA = 0, kRowB = 1, kRowResult = 3;

  RunBuilder run(Pane::Vedic, layout);
  const GridSpec& g = run.layout();
  std::vector<std::uint8_t> answer;
  ExactValue carry = 0;

  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    const std::size_t lo = k >= n ? k - (n - 1) : 0;
    const std::size_t hi = std::min(k, n - 1);

    std::string text;
    if (k == 0) {
      if (a.size() != b.size()) {
        const DigitString& shorter = a.size() < b.size() ? a : b;
        text += "Pad " + shorter.str() + " with zeros on the left to " + padToLength(shorter, n).str() +
                " so both numbers have " + std::to_string(n) + " digits. ";
      }
      text += "Multiply the one's digits vertically: ";
    } else if (k == 2 * n - 2) {
      text += "Multiply the digits in the highest place vertically: ";
    } else {
      const std::size_t width = hi - lo + 1;
      std::string group = (lo == 0 && hi == n - 1) ? (n == 2 ? std::string("both columns") : "all " + std::to_string(n) + " columns")
                          : lo == 0                ? "the " + std::to_string(width) + " rightmost columns"
                                                   : "the " + std::to_string(width) + " leftmost columns";
      text += "Cross-multiply " + group + " and add: ";
    }

    run.step("");
    if (k == 0) {
      run.writeNumber(kRowA, pa);
      run.writeNumber(kRowB, pb);
    }

    std::vector<ExactValue> terms;
    std::string shown;
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t j = k - i;
      run.highlight(kRowA, g.placeCol(i));
      run.highlight(kRowB, g.placeCol(j));
      run.multiplyDigits(pa.at(i), pb.at(j));
      terms.emplace_back(pa.at(i) * pb.at(j));
      if (!shown.empty()) shown += " + ";
      shown += std::to_string(pa.at(i)) + times() + std::to_string(pb.at(j));
    }
    ExactValue productSum = 0;
    for (const auto& t : terms) productSum += t;
    text += shown + " = " + productSum.str();
    if (carry != 0) {
      terms.push_back(carry);
      text += ", plus carry " + carry.str() + " is " + (productSum + carry).str();
    }
    if (terms.size() > 1) run.add(terms);

    const ExactValue total = productSum + carry;
    const unsigned digit = static_cast<unsigned>(total % 10);
    carry = total / 10;
    run.write(kRowResult, g.placeCol(k), std::to_string(digit));
    if (carry != 0) run.carry(carry, g.placeCol(k + 1));
    answer.push_back(static_cast<std::uint8_t>(digit));
    run.current().description = text + ". " + carryPhrase(digit, carry);
  }

  if (carry != 0) {
    // The product has at most 2n digits, so the closing carry is one digit.
    if (carry >= 10) throw InternalConsistencyError("criss-cross closing carry exceeds one digit");
    const std::size_t place = 2 * n - 1;
    run.step("Write the remaining carry " + carry.str() + " as the leading digit of the product.");
    run.write(kRowResult, g.placeCol(place), carry.str());
    answer.push_back(static_cast<std::uint8_t>(carry));
  }
  return run.finish(digitsFrom(answer));
}

// Place-value addition -----------------------------------------------------------
//
// One step per place: the digits of every addend in that place are totalled,
// the incoming carry added, the units digit written and the rest carried.
inline MethodRun placeValueAdd(std::span<const DigitString> operands) {
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
  layout.blocks = {{BlockKind::OperandRow, 0, count, "addends"},
                   {BlockKind::WorkRow, count, count + 1, "place totals"},
                   {BlockKind::ResultRow, count + 1, count + 2, "sum"}};
  const std::size_t rowTotals = count, rowResult = count + 1;

  RunBuilder run(Pane::Vedic, layout);
  const GridSpec& g = run.layout();
  std::vector<std::uint8_t> answer;
  ExactValue carry = 0;

  for (std::size_t k = 0; k < width; ++k) {
    run.step("");
    std::vector<ExactValue> digits;
    for (std::size_t r = 0; r < count; ++r) {
      if (k == 0) run.writeNumber(r, operands[r]);
      if (k < operands[r].size()) run.highlight(r, g.placeCol(k));
      digits.emplace_back(operands[r].at(k));
    }
    run.add(digits);
    ExactValue total = 0;
    for (const auto& d : digits) total += d;
    std::string text = "Add the digits in the " + placeName(k) + " place: " + joinValues(digits, "+") + " = " +
                       total.str();
    if (carry != 0) {
      run.add({total, carry});
      text += ", plus carry " + carry.str() + " is " + (total + carry).str();
      total += carry;
    }
    const unsigned digit = static_cast<unsigned>(total % 10);
    carry = total / 10;
    run.write(rowTotals, g.placeCol(k), total.str());
    run.write(rowResult, g.placeCol(k), std::to_string(digit));
    if (carry != 0) run.carry(carry, g.placeCol(k + 1));
    answer.push_back(static_cast<std::uint8_t>(digit));
    run.current().description = text + ". " + carryPhrase(digit, carry);
  }

  if (carry != 0) {
    // At most ten addends, so the sum gains at most one digit.
    if (carry >= 10) throw InternalConsistencyError("closing carry exceeds one digit");
    run.step("Write the final carry " + carry.str() + " in the " + placeName(width) + " place.");
    run.write(rowResult, g.placeCol(width), carry.str());
    answer.push_back(static_cast<std::uint8_t>(carry));
  }
  return run.finish(digitsFrom(answer));
}

// Duplex (Dwandwa) square root -----------------------------------------------------
//
// Digits are grouped in pairs from the right. The first root digit r1 comes
// from the leading group and fixes the divisor 2·r1. Every later digit of the
// number is brought down next to the running remainder, the duplex of the root
// digits found after r1 is subtracted, and the quotient by the divisor gives
// the next root digit. Once the root has one digit per group, the remaining
// columns only subtract duplexes; what is left is number − root².
//
// A greedy quotient can be too large for a later column. The search walks
// digits downward from the greedy choice and backtracks on any negative
// running remainder; every such reduction is shown as an adjustment step.
struct SqrtRun {
  MethodRun run;
  DigitString root;
  ExactValue remainder;
};

namespace detail {

// Column j (1-based, counted after the leading group) of the duplex method.
// `root` holds r1, r2, ... ; only root digits after r1 enter the duplex.
struct DuplexColumns {
  std::vector<unsigned> tail;  // digits after the leading group, most significant first
  unsigned leadingGroup = 0;
  std::size_t groups = 0;

  std::size_t columns() const { return tail.size(); }

  // Root digits (after r1) paired in column j: indices [lo, hi] into root.
  std::pair<std::size_t, std::size_t> duplexRange(std::size_t j) const {
    const std::size_t last = groups - 1;
    const std::size_t lo = j > last ? j - last : 1;
    const std::size_t hi = std::min(j - 1, last);
    return {lo, hi};
  }

  ExactValue duplexAt(std::size_t j, const std::vector<unsigned>& root) const {
    auto [lo, hi] = duplexRange(j);
    if (lo > hi) return 0;
    std::vector<std::uint8_t> slice;
    for (std::size_t a = lo; a <= hi; ++a) slice.push_back(static_cast<std::uint8_t>(root[a]));
    return duplex(std::span<const std::uint8_t>(slice));
  }
};

inline bool duplexSearch(const DuplexColumns& cols, std::size_t j, const ExactValue& rem, unsigned divisor,
                         std::vector<unsigned>& root) {
  if (j > cols.columns()) return true;
  const ExactValue net = rem * 10 + cols.tail[j - 1] - cols.duplexAt(j, root);
  if (net < 0) return false;
  if (j >= cols.groups) return duplexSearch(cols, j + 1, net, divisor, root);
  const ExactValue greedy = net / divisor;
  for (int r = greedy > 9 ? 9 : static_cast<int>(greedy); r >= 0; --r) {
    root.push_back(static_cast<unsigned>(r));
    if (duplexSearch(cols, j + 1, net - divisor * r, divisor, root)) return true;
    root.pop_back();
  }
  return false;
}

}  // namespace detail

inline SqrtRun duplexSqrt(const DigitString& x) {
  using namespace detail;
  const DigitString number = normalize(x);
  const std::string text = number.str();
  const std::size_t len = text.size();
  const std::size_t groups = (len + 1) / 2;
  const std::size_t leadLen = len % 2 == 1 ? 1 : 2;

  DuplexColumns cols;
  cols.groups = groups;
  cols.leadingGroup = static_cast<unsigned>(std::stoul(text.substr(0, leadLen)));
  for (std::size_t i = leadLen; i < len; ++i) cols.tail.push_back(static_cast<unsigned>(text[i] - '0'));

  unsigned r1 = 0;
  while ((r1 + 1) * (r1 + 1) <= cols.leadingGroup) ++r1;
  const unsigned divisor = 2 * r1;

  std::vector<unsigned> root{r1};
  if (groups > 1 && !duplexSearch(cols, 1, ExactValue(cols.leadingGroup - r1 * r1), divisor, root)) {
    throw InternalConsistencyError("duplex square root search found no root");
  }

  GridSpec layout;
  layout.rows = 6;
  layout.cols = len;
  layout.blocks = {{BlockKind::OperandRow, 0, 1, "number"},
                   {BlockKind::WorkRow, 1, 2, "gross dividends"},
                   {BlockKind::WorkRow, 2, 3, "remainders"},
                   {BlockKind::Guide, 3, 4, "divisor"},
                   {BlockKind::ResultRow, 4, 5, "root"},
                   {BlockKind::WorkRow, 5, 6, "final remainder"}};
  constexpr std::size_t kRowNumber = 0, kRowGross = 1, kRowRem = 2, kRowDivisor = 3, kRowRoot = 4, kRowFinal = 5;
  auto colOf = [&](std::size_t j) { return leadLen + j - 1; };  // column of tail digit j

  RunBuilder run(Pane::Vedic, layout);

  // Leading group.
  const ExactValue rem0 = cols.leadingGroup - r1 * r1;
  {
    std::string grouped;
    for (std::size_t i = 0; i < len; ++i) {
      if (i > 0 && (i - leadLen) % 2 == 0) grouped += "|";
      grouped += text[i];
    }
    std::string desc = len > 1 ? "Group the digits in pairs from the right: " + grouped + ". " : "";
    desc += "The largest square not above " + std::to_string(cols.leadingGroup) + " is " + std::to_string(r1) +
            times() + std::to_string(r1) + " = " + std::to_string(r1 * r1) + ", so the first root digit is " +
            std::to_string(r1) + "; remainder " + rem0.str() + ".";
    run.step(desc);
    run.writeNumber(kRowNumber, number);
    for (std::size_t i = 0; i < leadLen; ++i) run.highlight(kRowNumber, i);
    run.multiplyDigits(r1, r1);
    if (r1 < 9) run.multiplyDigits(r1 + 1, r1 + 1);
    run.op(difference({ExactValue(cols.leadingGroup), ExactValue(r1 * r1)}));
    run.write(kRowRoot, 0, std::to_string(r1));
    run.write(kRowRem, leadLen - 1, rem0.str());
    if (groups > 1) {
      run.multiplyDigits(2, r1);
      run.write(kRowDivisor, 0, std::to_string(divisor));
      run.current().description += " The divisor is 2" + times() + std::to_string(r1) + " = " +
                                   std::to_string(divisor) + ".";
    } else {
      run.write(kRowFinal, 0, rem0.str());
    }
  }

  // Later columns, replayed along the root the search settled on.
  ExactValue rem = rem0;
  auto column = [&](std::size_t j) {
    // Brings down digit j, subtracts its duplex; returns the net dividend.
    const unsigned digit = cols.tail[j - 1];
    const ExactValue gross = rem * 10 + digit;
    run.op({"10" + times() + rem.str() + "+" + std::to_string(digit), {10, rem, digit}, gross});
    run.tally().digitAdditions += 1;
    auto [lo, hi] = cols.duplexRange(j);
    ExactValue dup = 0;
    if (lo <= hi) {
      std::vector<ExactValue> parts;
      std::string expression;
      std::vector<ExactValue> literals;
      for (std::size_t a = lo, b = hi; a <= b; ++a, --b) {
        run.multiplyDigits(root[a], root[b]);
        const ExactValue p = root[a] * root[b];
        if (!expression.empty()) expression += "+";
        if (a == b) {
          expression += p.str();
          literals.push_back(p);
          dup += p;
        } else {
          expression += "2" + times() + p.str();
          literals.insert(literals.end(), {2, p});
          dup += 2 * p;
        }
      }
      if (literals.size() > 1) {
        run.op({expression, literals, dup});
        run.tally().digitAdditions += expr::countAdditions(expression);
        if (expr::isDigitProduct(expression)) ++run.tally().digitMultiplications;
      }
      run.op(difference({gross, dup}));
    }
    run.write(kRowGross, colOf(j), gross.str());
    run.highlight(kRowNumber, colOf(j));
    return std::pair{gross - dup, dup};
  };

  for (std::size_t j = 1; j < groups; ++j) {
    const unsigned chosen = root[j];
    run.step("");
    auto [net, dup] = column(j);
    const ExactValue rawQuotient = net / divisor;
    const unsigned trial = rawQuotient > 9 ? 9u : static_cast<unsigned>(rawQuotient);
    run.op(quotient(net, divisor));
    std::string desc = "Bring down " + std::to_string(cols.tail[j - 1]) + " beside remainder " + rem.str() +
                       " to get " + (net + dup).str();
    if (dup != 0) desc += ", subtract the duplex " + dup.str() + " to get " + net.str();
    desc += ", and divide by " + std::to_string(divisor) + ": the trial root digit is " + std::to_string(trial);
    if (rawQuotient > 9) desc += " (the quotient " + rawQuotient.str() + " is capped at 9)";
    run.current().description = desc + ".";

    for (unsigned v = trial; v > chosen; --v) {
      run.step("Adjustment: root digit " + std::to_string(v) +
               " leaves no way to keep the later remainders non-negative, so reduce it to " +
               std::to_string(v - 1) + ".");
      run.op(difference({ExactValue(v), ExactValue(1)}));
      run.highlight(kRowGross, colOf(j));
    }

    const ExactValue next = net - divisor * chosen;
    run.op({net.str() + minus() + std::to_string(divisor) + times() + std::to_string(chosen),
            {net, divisor, chosen},
            next});
    run.write(kRowRoot, j, std::to_string(chosen));
    run.write(kRowRem, colOf(j), next.str());
    rem = next;
    run.current().description += " Root digit " + std::to_string(chosen) + " leaves remainder " + next.str() + ".";

    if (j + 1 == groups) {
      // Remaining columns complete the remainder against the finished root.
      for (std::size_t c = groups; c <= cols.columns(); ++c) {
        auto [netC, dupC] = column(c);
        rem = netC;
        run.write(kRowRem, colOf(c), rem.str());
      }
      run.write(kRowFinal, 0, rem.str());
      if (cols.columns() >= groups) {
        run.current().description += " Bring down the remaining digits, subtracting their duplexes, to leave "
                                     "the remainder " +
                                     rem.str() + ".";
      }
    }
  }

  std::vector<std::uint8_t> rootLsb;
  for (auto it = root.rbegin(); it != root.rend(); ++it) rootLsb.push_back(static_cast<std::uint8_t>(*it));
  DigitString rootDigits = digitsFrom(rootLsb);
  const ExactValue remainder = groups > 1 ? rem : rem0;
  MethodRun methodRun = run.finish(rootDigits, remainder);
  return {std::move(methodRun), std::move(rootDigits), remainder};
}

// Subtraction by ten's complement (Nikhilam) ---------------------------------------
//
// a − b = a + (10^w − b) − 10^w with w the wider operand length: complement b
// (all from 9 and the last from 10), add place by place, then drop the
// leading 1. When a is itself a power of ten 10^k with k no smaller than b's
// length, the complement of b against 10^k is already the answer.
inline MethodRun complementSubtract(const DigitString& a, const DigitString& b) {
  using namespace detail;
  if (compareDigits(a, b) < 0) throw NegativeResultError(negativeResultWarning(a.str(), b.str()));

  const DigitString na = normalize(a);
  const DigitString nb = normalize(b);
  const std::size_t w = std::max(a.size(), b.size());

  // Complement subOps left to right; trailing zeros of b stay zero.
  auto complementOps = [&](RunBuilder& run, std::size_t width, std::size_t row) {
    std::size_t lowest = 0;
    while (nb.at(lowest) == 0) ++lowest;
    const DigitString c = tensComplement(nb, width);
    for (std::size_t k = width; k-- > 0;) {
      if (k > lowest) {
        run.op(difference({9, nb.at(k)}));
      } else if (k == lowest) {
        run.op(difference({10, nb.at(k)}));
      }
      run.write(row, run.layout().placeCol(k), std::to_string(c.at(k)));
    }
    return c;
  };

  const bool powerOfTen = na.size() > 1 && na.at(na.size() - 1) == 1 &&
                          std::all_of(na.digits().begin(), na.digits().end() - 1, [](auto d) { return d == 0; });
  if (powerOfTen && !nb.isZero() && na.size() - 1 >= nb.size()) {
    const std::size_t k = na.size() - 1;
    GridSpec layout;
    layout.rows = 3;
    layout.cols = w;
    layout.blocks = {{BlockKind::OperandRow, 0, 2, "operands"}, {BlockKind::ResultRow, 2, 3, "difference"}};
    RunBuilder run(Pane::Vedic, layout);
    run.step(na.str() + " is a power of ten, so " + na.str() + minus() + nb.str() + " is the complement of " +
             nb.str() + ": all from 9 and the last from 10.");
    run.writeNumber(0, a);
    run.writeNumber(1, b);
    for (std::size_t p = 0; p < b.size(); ++p) run.highlight(1, run.layout().placeCol(p));
    const DigitString c = complementOps(run, k, 2);
    run.current().description += " The difference is " + normalize(c).str() + ".";
    return run.finish(c);
  }

  GridSpec layout;
  layout.rows = 5;
  layout.cols = w + 1;
  layout.blocks = {{BlockKind::OperandRow, 0, 2, "operands"},
                   {BlockKind::WorkRow, 2, 3, "complement"},
                   {BlockKind::ResultRow, 3, 4, "difference"},
                   {BlockKind::Guide, 4, 5, "discarded overflow"}};
  constexpr std::size_t kRowA = 0, kRowB = 1, kRowComplement = 2, kRowResult = 3, kRowOverflow = 4;
  RunBuilder run(Pane::Vedic, layout);
  const GridSpec& g = run.layout();
  const DigitString paddedB = padToLength(b, w);

  DigitString c;
  if (nb.isZero()) {
    run.step("The complement of 0 against 1" + std::string(w, '0') + " is 1" + std::string(w, '0') + ".");
    run.writeNumber(kRowA, a);
    run.writeNumber(kRowB, b);
    c = tensComplement(nb, w);
    run.writeNumber(kRowComplement, c);
  } else {
    run.step("Take the complement of " + paddedB.str() + " against 1" + std::string(w, '0') +
             ": all from 9 and the last from 10.");
    run.writeNumber(kRowA, a);
    run.writeNumber(kRowB, b);
    for (std::size_t p = 0; p < b.size(); ++p) run.highlight(kRowB, g.placeCol(p));
    c = complementOps(run, w, kRowComplement);
    run.current().description += " The complement is " + c.str() + ".";
  }

  std::vector<std::uint8_t> low;
  ExactValue carry = 0;
  for (std::size_t k = 0; k < w; ++k) {
    run.step("");
    run.highlight(kRowA, g.placeCol(k));
    run.highlight(kRowComplement, g.placeCol(k));
    std::vector<ExactValue> terms{a.at(k), c.at(k)};
    if (carry != 0) terms.push_back(carry);
    run.add(terms);
    ExactValue total = 0;
    for (const auto& t : terms) total += t;
    const unsigned digit = static_cast<unsigned>(total % 10);
    carry = total / 10;
    run.write(kRowResult, g.placeCol(k), std::to_string(digit));
    if (carry != 0) run.carry(carry, g.placeCol(k + 1));
    low.push_back(static_cast<std::uint8_t>(digit));
    run.current().description = "Add the " + placeName(k) + " digits of " + a.str() + " and the complement: " +
                                joinValues(terms, "+") + " = " + total.str() + ". " + carryPhrase(digit, carry);
  }

  const ExactValue overflow = carry + c.at(w);
  if (overflow != 1) throw InternalConsistencyError("complement sum did not overflow by exactly one");
  ExactValue lowValue = 0;
  for (auto it = low.rbegin(); it != low.rend(); ++it) lowValue = lowValue * 10 + *it;
  ExactValue power = 1;
  for (std::size_t i = 0; i < w; ++i) power *= 10;
  const DigitString result = digitsFrom(low);
  run.step("Drop the leading 1, which stands for the 1" + std::string(w, '0') +
           " added by the complement: the difference is " + normalize(result).str() + ".");
  run.op(difference({power + lowValue, power}));
  run.write(kRowOverflow, g.placeCol(w), overflow.str());
  run.highlight(kRowResult, g.placeCol(w - 1));
  return run.finish(result);
}

}  // namespace sutra
