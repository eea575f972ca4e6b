#pragma once

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sutra/engine.hpp"
#include "sutra/render.hpp"
#include "sutra/serialize.hpp"

// Command implementations behind the `sutra` executable. Each writes its
// output to `out`, diagnostics to `err`, and returns the process exit code.
// Nothing is written to `out` unless the command succeeds.

namespace sutra::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidOperands = 2,
  kBlocked = 3,
  kUnknownMethod = 4,
};

enum class Format { Text, Json };

inline std::optional<Format> parseFormat(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

// Splits "12, 34" on commas; each piece is trimmed and parsed. The reported
// ParseError position is relative to the whole list.
inline std::vector<DigitString> parseOperandList(std::string_view list) {
  std::vector<DigitString> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    const std::string_view piece = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    try {
      out.push_back(parseOperand(piece));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.reason());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Reads SUTRA_MAX_DIGITS; falls back to the default for unset or bad values.
inline std::size_t maxDigitsFromEnv() {
  const char* raw = std::getenv("SUTRA_MAX_DIGITS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxDigits;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultMaxDigits;
  return static_cast<std::size_t>(v);
}

struct TraceArgs {
  std::string method;
  std::string operands;
  Format format = Format::Text;
  LatentDisplay latent = LatentDisplay::Vedic;
  std::size_t maxDigits = kDefaultMaxDigits;
};

struct CompareArgs {
  std::string operation;
  std::string operands;
  Format format = Format::Text;
  LatentDisplay latent = LatentDisplay::Vedic;
  std::size_t maxDigits = kDefaultMaxDigits;
};

namespace detail {

inline void printWarnings(const std::vector<Warning>& warnings, std::ostream& err) {
  for (const auto& w : warnings) {
    if (!w.blocking) continue;
    err << "warning [" << w.code << "]: " << w.message;
    if (!w.suggestion.empty()) err << " (" << w.suggestion << ")";
    err << "\n";
  }
}

// Runs `body`, mapping library errors to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidOperands;
  } catch (const ApplicabilityError& e) {
    printWarnings(e.warnings(), err);
    return kBlocked;
  } catch (const NegativeResultError& e) {
    printWarnings({e.warning()}, err);
    return kBlocked;
  } catch (const UnknownMethodError& e) {
    err << "error: " << e.what() << "\n";
    return kUnknownMethod;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace detail

inline int runList(bool json, std::ostream& out) {
  const auto methods = listMethods();
  if (json) {
    out << canonicalSerialize(methods);
  } else {
    out << render::renderMethodTable(methods);
  }
  return kOk;
}

inline int runInfo(std::string_view id, bool json, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto d = describeMethod(id);
    if (json) {
      out << canonicalSerialize(d);
    } else {
      out << render::renderDescriptor(d);
    }
    return int{kOk};
  });
}

inline int runTrace(const TraceArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    describeMethod(args.method);  // unknown ids win over operand errors
    const auto operands = parseOperandList(args.operands);
    const Trace t = buildTrace(args.method, operands, Options{args.maxDigits, args.latent});
    const std::string text = args.format == Format::Json ? canonicalSerialize(t) : render::renderTrace(t);
    out << text;
    return int{kOk};
  });
}

inline int runCompare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto op = parseOperation(args.operation);
    if (!op) {
      err << "error: unknown operation '" << args.operation << "' (expected add, subtract, multiply or sqrt)\n";
      return int{kUnknownMethod};
    }
    const auto operands = parseOperandList(args.operands);
    const ComparisonReport r = buildComparison(*op, operands, Options{args.maxDigits, args.latent});
    const std::string text = args.format == Format::Json ? canonicalSerialize(r) : render::renderComparison(r);
    out << text;
    return int{kOk};
  });
}

}  // namespace sutra::cli
