#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sutra {

// One entry of an applicability report. Blocking warnings stop a run; the
// others are informational notes shown beside the visualization.
struct Warning {
  std::string code;
  std::string message;
  std::string suggestion;
  bool blocking = true;

  friend bool operator==(const Warning&, const Warning&) = default;
};

namespace codes {
inline constexpr const char* kArity = "ARITY";
inline constexpr const char* kNegativeResult = "NEGATIVE_RESULT";
inline constexpr const char* kOperandTooLong = "OPERAND_TOO_LONG";
inline constexpr const char* kPaddingApplied = "PADDING_APPLIED";
inline constexpr const char* kUnknownMethod = "UNKNOWN_METHOD";
inline constexpr const char* kParseError = "PARSE_ERROR";
}  // namespace codes

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string reason)
      : Error("invalid operand at position " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  ArityError(std::size_t got, std::size_t min, std::size_t max)
      : Error("expected " + std::to_string(min) + (min == max ? "" : ".." + std::to_string(max)) +
              " operands, got " + std::to_string(got)),
        got_(got) {}

  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t got_;
};

// Raised when a subtraction would go below zero. Carries the same structured
// warning that validation reports, so frontends can show it as-is.
class NegativeResultError : public Error {
 public:
  explicit NegativeResultError(Warning warning)
      : Error(warning.message), warning_(std::move(warning)) {}

  const Warning& warning() const noexcept { return warning_; }

 private:
  Warning warning_;
};

inline Warning negativeResultWarning(const std::string& minuend, const std::string& subtrahend) {
  return Warning{codes::kNegativeResult,
                 "cannot subtract " + subtrahend + " from " + minuend +
                     ": the result would be negative",
                 "enter the larger number first",
                 true};
}

class ReplayError : public Error {
 public:
  ReplayError(std::size_t stepIndex, std::string reason)
      : Error("replay failed at step " + std::to_string(stepIndex) + ": " + reason),
        stepIndex_(stepIndex),
        reason_(std::move(reason)) {}

  std::size_t stepIndex() const noexcept { return stepIndex_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t stepIndex_;
  std::string reason_;
};

class UnknownMethodError : public Error {
 public:
  explicit UnknownMethodError(std::string id)
      : Error("unknown method '" + id + "'"), id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// A run was refused because validation produced blocking warnings.
class ApplicabilityError : public Error {
 public:
  ApplicabilityError(std::string context, std::vector<Warning> warnings)
      : Error(compose(context, warnings)), warnings_(std::move(warnings)) {}

  const std::vector<Warning>& warnings() const noexcept { return warnings_; }

 private:
  static std::string compose(const std::string& context, const std::vector<Warning>& warnings) {
    std::string msg = context;
    for (const auto& w : warnings) {
      if (!w.blocking) continue;
      msg += (msg.empty() ? "" : ": ") + w.code + ": " + w.message;
    }
    return msg;
  }

  std::vector<Warning> warnings_;
};

// Raised when a method's self-reported metrics or replay disagree with its
// steps. Never expected in a correct build.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sutra
