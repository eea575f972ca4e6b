#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "sutra/error.hpp"
#include "sutra/numeral.hpp"
#include "sutra/serialize.hpp"
#include "sutra/trace.hpp"
#include "sutra/traditional.hpp"
#include "sutra/vedic.hpp"

namespace sutra {

enum class Operation { Add, Subtract, Multiply, Sqrt };
enum class Family { Vedic, Traditional };

inline std::string_view toString(Operation op) {
  switch (op) {
    case Operation::Add: return "add";
    case Operation::Subtract: return "subtract";
    case Operation::Multiply: return "multiply";
    case Operation::Sqrt: return "sqrt";
  }
  return "add";
}

inline std::optional<Operation> parseOperation(std::string_view s) {
  if (s == "add") return Operation::Add;
  if (s == "subtract") return Operation::Subtract;
  if (s == "multiply") return Operation::Multiply;
  if (s == "sqrt") return Operation::Sqrt;
  return std::nullopt;
}

inline std::string_view toString(Family f) { return f == Family::Vedic ? "vedic" : "traditional"; }

inline constexpr std::size_t kDefaultMaxDigits = 50;

struct Options {
  std::size_t maxDigits = kDefaultMaxDigits;
  LatentDisplay latentDisplay = LatentDisplay::Vedic;
};

struct MethodDescriptor {
  std::string id;
  Operation operation = Operation::Add;
  Family family = Family::Vedic;
  std::string displayName;
  std::string infoText;
  int level = 1;  // 1 addition, 2 subtraction and multiplication, 3 square root
  std::size_t minOperands = 1;
  std::size_t maxOperands = 1;
  std::vector<std::string> constraints;

  friend bool operator==(const MethodDescriptor&, const MethodDescriptor&) = default;
};

struct ApplicabilityReport {
  bool ok = true;
  std::vector<Warning> warnings;
};

struct ComparisonReport {
  Trace vedic;
  Trace traditional;
  std::map<std::string, long long> deltas;  // vedic − traditional, per metric
};

namespace detail {

using Runner = std::function<MethodRun(std::span<const DigitString>)>;

struct RegistryEntry {
  MethodDescriptor descriptor;
  Runner run;
};

inline std::vector<RegistryEntry> makeRegistry() {
  std::vector<RegistryEntry> r;
  r.push_back({{"vedic.add.placevalue", Operation::Add, Family::Vedic, "Place-value addition",
                "Adds 2 to 10 numbers one place value at a time. The digits in each place are totalled "
                "together, the units digit of the total is kept and the rest moves to the next place. "
                "Suits long columns of numbers because each place is settled in a single pass.",
                1, 2, kMaxAddends, {"2 to 10 whole numbers", "no signs or decimals"}},
               [](auto ops) { return placeValueAdd(ops); }});
  r.push_back({{"traditional.add.column", Operation::Add, Family::Traditional, "Column addition",
                "The familiar right-to-left column addition, with each carry written above the next column.",
                1, 2, kMaxAddends, {"2 to 10 whole numbers", "no signs or decimals"}},
               [](auto ops) { return columnAdd(ops); }});
  r.push_back({{"vedic.subtract.complement", Operation::Subtract, Family::Vedic, "Complement subtraction (Nikhilam)",
                "Turns subtraction into addition. The number being subtracted is replaced by its complement "
                "against the next power of ten (all digits from 9 and the last from 10), the complement is "
                "added, and the leading 1 is dropped. When the first number is itself a power of ten the "
                "complement is the answer directly.",
                2, 2, 2, {"first number must not be smaller than the second", "no signs or decimals"}},
               [](auto ops) { return complementSubtract(ops[0], ops[1]); }});
  r.push_back({{"traditional.subtract.borrow", Operation::Subtract, Family::Traditional, "Borrow subtraction",
                "Right-to-left column subtraction, borrowing 1 from the next column whenever the top digit is "
                "too small.",
                2, 2, 2, {"first number must not be smaller than the second", "no signs or decimals"}},
               [](auto ops) { return borrowSubtract(ops[0], ops[1]); }});
  r.push_back({{"vedic.multiply.crisscross", Operation::Multiply, Family::Vedic,
                "Vertically and crosswise (Urdhva-Tiryagbhyam)",
                "Multiplies two numbers with the same number of digits by building the answer one place at "
                "a time: each place collects the cross products of the digit pairs whose places add up to it, "
                "so every step yields a final digit of the product. Numbers of different lengths are first "
                "padded with zeros on the left to equal length; those zeros still take part in the cross "
                "products, which is why zero products appear in the working.",
                2, 2, 2, {"two whole numbers", "unequal lengths are padded with leading zeros"}},
               [](auto ops) { return crissCrossMultiply(ops[0], ops[1]); }});
  r.push_back({{"traditional.multiply.long", Operation::Multiply, Family::Traditional, "Long multiplication",
                "One partial product per digit of the second number, each shifted one place further left, "
                "then the partial products are added column by column.",
                2, 2, 2, {"two whole numbers"}},
               [](auto ops) { return longMultiply(ops[0], ops[1]); }});
  r.push_back({{"vedic.sqrt.duplex", Operation::Sqrt, Family::Vedic, "Duplex square root (Dwandwa)",
                "Finds the whole-number square root and remainder. Digits are grouped in pairs from the right; "
                "the first root digit comes from the leading group and twice it becomes the divisor. Each "
                "further digit is brought down, the duplex of the root digits found so far is subtracted, and "
                "division by the divisor gives the next root digit. A root digit that turns out too large is "
                "reduced in a separate adjustment step.",
                3, 1, 1, {"one whole number", "gives the whole-number root and the remainder"}},
               [](auto ops) { return duplexSqrt(ops[0]).run; }});
  r.push_back({{"traditional.sqrt.longdivision", Operation::Sqrt, Family::Traditional, "Long-division square root",
                "Brings down pairs of digits and at each step finds the largest digit t such that "
                "(20 times the root so far, plus t) times t fits in the current remainder.",
                3, 1, 1, {"one whole number", "gives the whole-number root and the remainder"}},
               [](auto ops) { return longDivisionSqrt(ops[0]).run; }});

  std::stable_sort(r.begin(), r.end(), [](const auto& x, const auto& y) {
    return std::tie(x.descriptor.level, x.descriptor.id) < std::tie(y.descriptor.level, y.descriptor.id);
  });
  return r;
}

// Built on first use, immutable afterwards.
inline const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = makeRegistry();
  return entries;
}

inline const RegistryEntry& lookup(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.descriptor.id == id) return e;
  }
  throw UnknownMethodError(std::string(id));
}

inline std::string arityText(const MethodDescriptor& d) {
  if (d.minOperands == d.maxOperands) return "exactly " + plural(d.minOperands, "operand");
  return std::to_string(d.minOperands) + " to " + std::to_string(d.maxOperands) + " operands";
}

}  // namespace detail

inline std::vector<MethodDescriptor> listMethods() {
  std::vector<MethodDescriptor> out;
  for (const auto& e : detail::registry()) out.push_back(e.descriptor);
  return out;
}

inline MethodDescriptor describeMethod(std::string_view id) { return detail::lookup(id).descriptor; }

inline std::string methodIdFor(Operation op, Family family) {
  for (const auto& e : detail::registry()) {
    if (e.descriptor.operation == op && e.descriptor.family == family) return e.descriptor.id;
  }
  throw UnknownMethodError(std::string(toString(family)) + "." + std::string(toString(op)));
}

inline ApplicabilityReport validate(std::string_view id, std::span<const DigitString> operands,
                                    const Options& options = {}) {
  const MethodDescriptor& d = detail::lookup(id).descriptor;
  ApplicabilityReport report;
  const bool arityOk = operands.size() >= d.minOperands && operands.size() <= d.maxOperands;
  if (!arityOk) {
    report.warnings.push_back({codes::kArity,
                               d.displayName + " takes " + detail::arityText(d) + "; got " +
                                   std::to_string(operands.size()),
                               "enter " + detail::arityText(d), true});
  }
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (operands[i].size() > options.maxDigits) {
      report.warnings.push_back({codes::kOperandTooLong,
                                 "operand " + std::to_string(i + 1) + " has " + std::to_string(operands[i].size()) +
                                     " digits; the limit is " + std::to_string(options.maxDigits),
                                 "use numbers of at most " + std::to_string(options.maxDigits) + " digits", true});
    }
  }
  if (arityOk && d.operation == Operation::Subtract && detail::compareDigits(operands[0], operands[1]) < 0) {
    report.warnings.push_back(negativeResultWarning(operands[0].str(), operands[1].str()));
  }
  if (arityOk && d.operation == Operation::Multiply && d.family == Family::Vedic &&
      operands[0].size() != operands[1].size()) {
    const std::size_t n = std::max(operands[0].size(), operands[1].size());
    report.warnings.push_back({codes::kPaddingApplied,
                               "the shorter number will be padded with zeros on the left to " +
                                   std::to_string(n) + " digits",
                               "", false});
  }
  report.ok = std::none_of(report.warnings.begin(), report.warnings.end(), [](const Warning& w) { return w.blocking; });
  return report;
}

inline Trace buildTrace(std::string_view id, std::span<const DigitString> operands, const Options& options = {}) {
  const auto& entry = detail::lookup(id);
  ApplicabilityReport report = validate(id, operands, options);
  if (!report.ok) throw ApplicabilityError(std::string(id), std::move(report.warnings));

  MethodRun run = entry.run(operands);
  if (recomputeMetrics(run.steps) != run.metrics) {
    throw InternalConsistencyError(std::string(id) + " reported metrics that disagree with its steps");
  }
  try {
    replay(run);
  } catch (const ReplayError& e) {
    throw InternalConsistencyError(std::string(id) + " produced an unreplayable trace: " + e.what());
  }

  Trace t;
  t.methodId = std::string(id);
  t.operands.assign(operands.begin(), operands.end());
  t.layouts[run.pane] = std::move(run.layout);
  t.steps = std::move(run.steps);
  t.result = normalize(run.result);
  t.remainder = std::move(run.remainder);
  t.metrics = run.metrics;
  t.latentDisplay = options.latentDisplay;
  return t;
}

inline std::map<std::string, long long> metricDeltas(const Metrics& v, const Metrics& t) {
  auto d = [](std::size_t a, std::size_t b) { return static_cast<long long>(a) - static_cast<long long>(b); };
  return {{"digitMultiplications", d(v.digitMultiplications, t.digitMultiplications)},
          {"digitAdditions", d(v.digitAdditions, t.digitAdditions)},
          {"carries", d(v.carries, t.carries)},
          {"mainSteps", d(v.mainSteps, t.mainSteps)},
          {"basicOps", d(v.basicOps, t.basicOps)}};
}

inline ComparisonReport buildComparison(Operation op, std::span<const DigitString> operands,
                                        const Options& options = {}) {
  const std::string vedicId = methodIdFor(op, Family::Vedic);
  const std::string traditionalId = methodIdFor(op, Family::Traditional);
  for (const auto& [family, id] : {std::pair{Family::Vedic, vedicId}, std::pair{Family::Traditional, traditionalId}}) {
    ApplicabilityReport report = validate(id, operands, options);
    if (!report.ok) {
      throw ApplicabilityError(std::string(toString(family)) + " method " + id, std::move(report.warnings));
    }
  }
  ComparisonReport out;
  out.vedic = buildTrace(vedicId, operands, options);
  out.traditional = buildTrace(traditionalId, operands, options);
  if (out.vedic.result != out.traditional.result || out.vedic.remainder != out.traditional.remainder) {
    throw InternalConsistencyError("vedic and traditional results disagree for " + std::string(toString(op)));
  }
  out.deltas = metricDeltas(out.vedic.metrics, out.traditional.metrics);
  return out;
}

// JSON ------------------------------------------------------------------------

inline void to_json(Json& j, const MethodDescriptor& d) {
  j = Json{{"id", d.id},
           {"operation", std::string(toString(d.operation))},
           {"family", std::string(toString(d.family))},
           {"displayName", d.displayName},
           {"infoText", d.infoText},
           {"level", d.level},
           {"operandArity", Json{{"min", d.minOperands}, {"max", d.maxOperands}}},
           {"constraints", d.constraints}};
}

inline void from_json(const Json& j, MethodDescriptor& d) {
  j.at("id").get_to(d.id);
  auto op = parseOperation(j.at("operation").get<std::string>());
  if (!op) throw FormatError("unknown operation");
  d.operation = *op;
  const auto family = j.at("family").get<std::string>();
  if (family != "vedic" && family != "traditional") throw FormatError("unknown family");
  d.family = family == "vedic" ? Family::Vedic : Family::Traditional;
  j.at("displayName").get_to(d.displayName);
  j.at("infoText").get_to(d.infoText);
  j.at("level").get_to(d.level);
  j.at("operandArity").at("min").get_to(d.minOperands);
  j.at("operandArity").at("max").get_to(d.maxOperands);
  j.at("constraints").get_to(d.constraints);
}

inline void to_json(Json& j, const ApplicabilityReport& r) { j = Json{{"ok", r.ok}, {"warnings", r.warnings}}; }

inline void to_json(Json& j, const ComparisonReport& r) {
  j = Json{{"vedic", r.vedic}, {"traditional", r.traditional}, {"deltas", r.deltas}};
}

inline void from_json(const Json& j, ComparisonReport& r) {
  j.at("vedic").get_to(r.vedic);
  j.at("traditional").get_to(r.traditional);
  j.at("deltas").get_to(r.deltas);
}

inline std::string canonicalSerialize(const ComparisonReport& r) { return canonicalDump(Json(r)); }

inline std::string canonicalSerialize(const std::vector<MethodDescriptor>& methods) {
  return canonicalDump(Json(methods));
}

inline std::string canonicalSerialize(const MethodDescriptor& d) { return canonicalDump(Json(d)); }

}  // namespace sutra
