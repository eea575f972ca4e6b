#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sutra/error.hpp"

namespace sutra {

// Arbitrary-precision integer. Methods never compute with it digit-wise; it is
// the exact side of every correctness check and holds multi-digit remainders.
using ExactValue =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string toString(const ExactValue& v) { return v.str(); }

// DigitString -----------------------------------------------------------------
//
// Base-10 digits of a non-negative integer, least-significant place first, so
// digits()[k] carries weight 10^k. Always at least one digit. Leading
// (most-significant) zeros are legal and preserved until normalize().
class DigitString {
 public:
  DigitString() : digits_{0} {}

  explicit DigitString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
      throw std::invalid_argument("DigitString needs at least one digit");
    }
    for (auto d : digits_) {
      if (d > 9) throw std::invalid_argument("DigitString digit out of range");
    }
  }

  std::size_t size() const noexcept { return digits_.size(); }

  // Digit at place k; places beyond the stored length read as zero.
  unsigned at(std::size_t place) const noexcept {
    return place < digits_.size() ? digits_[place] : 0u;
  }

  std::span<const std::uint8_t> digits() const noexcept { return digits_; }

  bool isZero() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
  }

  // Most-significant-first text, leading zeros included.
  std::string str() const {
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
      out.push_back(static_cast<char>('0' + *it));
    }
    return out;
  }

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

// parseOperand ----------------------------------------------------------------

// Accepts optional surrounding whitespace around a run of decimal digits.
// Leading zeros are kept exactly as typed.
inline DigitString parseOperand(std::string_view text) {
  auto isSpace = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && isSpace(text[begin])) ++begin;
  while (end > begin && isSpace(text[end - 1])) --end;
  if (begin == end) {
    throw ParseError(begin, "operand is empty");
  }
  std::vector<std::uint8_t> digits;
  digits.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
      continue;
    }
    if (c == '-' || c == '+') throw ParseError(i, "signs are not allowed; operands are non-negative integers");
    if (c == '.' || c == ',') throw ParseError(i, "decimal points are not allowed; operands are whole numbers");
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString(std::move(digits));
}

// Conversions -----------------------------------------------------------------

inline ExactValue valueOf(const DigitString& d) {
  ExactValue v = 0;
  auto digits = d.digits();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v *= 10;
    v += static_cast<unsigned>(*it);
  }
  return v;
}

inline DigitString fromValue(ExactValue v) {
  if (v < 0) throw std::invalid_argument("fromValue needs a non-negative value");
  std::vector<std::uint8_t> digits;
  do {
    digits.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(v % 10)));
    v /= 10;
  } while (v != 0);
  return DigitString(std::move(digits));
}

inline DigitString fromUnsigned(std::uint64_t v) { return fromValue(ExactValue(v)); }

// Strips most-significant zeros, keeping one digit for zero.
inline DigitString normalize(const DigitString& d) {
  auto digits = d.digits();
  std::size_t len = digits.size();
  while (len > 1 && digits[len - 1] == 0) --len;
  return DigitString(std::vector<std::uint8_t>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(len)));
}

inline DigitString padToLength(const DigitString& d, std::size_t n) {
  if (n < d.size()) {
    throw LengthError("cannot pad a " + std::to_string(d.size()) + "-digit operand to " +
                      std::to_string(n) + " places");
  }
  std::vector<std::uint8_t> digits(d.digits().begin(), d.digits().end());
  digits.resize(n, 0);
  return DigitString(std::move(digits));
}

// Duplex (Dwandwa): twice the sum of products of digits equidistant from the
// ends, plus the square of the middle digit when the length is odd.
inline ExactValue duplex(std::span<const std::uint8_t> digits) {
  std::uint64_t total = 0;
  const std::size_t len = digits.size();
  for (std::size_t i = 0, j = len; i < j--; ++i) {
    if (i == j) {
      total += static_cast<std::uint64_t>(digits[i]) * digits[i];
    } else {
      total += 2ull * digits[i] * digits[j];
    }
  }
  return ExactValue(total);
}

inline ExactValue duplex(const DigitString& d) { return duplex(d.digits()); }

// Ten's complement against 10^width by the all-from-9, last-from-10 rule.
// The result has `width` digits, or width+1 digits (10^width) when d is zero.
inline DigitString tensComplement(const DigitString& d, std::size_t width) {
  const DigitString n = normalize(d);
  if (width == 0 || width < n.size()) {
    throw LengthError("complement width " + std::to_string(width) + " is too small for a " +
                      std::to_string(n.size()) + "-digit operand");
  }
  if (n.isZero()) {
    std::vector<std::uint8_t> digits(width + 1, 0);
    digits[width] = 1;
    return DigitString(std::move(digits));
  }
  std::vector<std::uint8_t> digits(width, 0);
  std::size_t lowest = 0;
  while (n.at(lowest) == 0) ++lowest;  // trailing zeros stay zero
  digits[lowest] = static_cast<std::uint8_t>(10 - n.at(lowest));
  for (std::size_t k = lowest + 1; k < width; ++k) {
    digits[k] = static_cast<std::uint8_t>(9 - n.at(k));
  }
  return DigitString(std::move(digits));
}

}  // namespace sutra
