#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sutra/numeral.hpp"

using namespace sutra;

namespace {

std::vector<std::uint8_t> digitsOf(const DigitString& d) { return {d.digits().begin(), d.digits().end()}; }

oracle::Int asOracle(const ExactValue& v) { return oracle::value(v.str()); }

}  // namespace

TEST(ParseOperand, PlaceOrderIsLeastSignificantFirst) {
  EXPECT_EQ(digitsOf(parseOperand("0")), (std::vector<std::uint8_t>{0}));
  EXPECT_EQ(digitsOf(parseOperand("123")), (std::vector<std::uint8_t>{3, 2, 1}));
}

TEST(ParseOperand, KeepsLeadingZeros) {
  const DigitString d = parseOperand("007");
  EXPECT_EQ(digitsOf(d), (std::vector<std::uint8_t>{7, 0, 0}));
  EXPECT_EQ(asOracle(valueOf(d)), oracle::Int(7));
  EXPECT_EQ(d.str(), "007");
}

TEST(ParseOperand, TrimsSurroundingWhitespace) {
  EXPECT_EQ(parseOperand("  42\t").str(), "42");
}

TEST(ParseOperand, RejectsWithPosition) {
  auto positionOf = [](const std::string& text) {
    try {
      parseOperand(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(positionOf(""), 0);
  EXPECT_EQ(positionOf("   "), 3);
  EXPECT_EQ(positionOf("-4"), 0);
  EXPECT_EQ(positionOf("+4"), 0);
  EXPECT_EQ(positionOf("3.5"), 1);
  EXPECT_EQ(positionOf("12a"), 2);
  EXPECT_EQ(positionOf("1 2"), 1);
}

TEST(ValueOf, PositionalNotation) {
  EXPECT_EQ(valueOf(DigitString({0})), 0);
  EXPECT_EQ(valueOf(DigitString({3, 2, 1})), 123);
  EXPECT_EQ(asOracle(valueOf(DigitString({9, 9, 9, 9, 9, 9, 9, 9, 9, 9}))), oracle::value("9999999999"));
}

TEST(ValueOf, RoundTripsParsedTextUpTo50Digits) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::string text = oracle::randomNumber(rng, 1, 50);
    EXPECT_EQ(asOracle(valueOf(parseOperand(text))), oracle::value(text)) << text;
  }
}

TEST(ValueOf, FromValueInvertsOnNormalizedForms) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const DigitString d = parseOperand(oracle::randomNumber(rng, 1, 30));
    EXPECT_EQ(fromValue(valueOf(d)), d);
  }
  EXPECT_EQ(fromValue(0), DigitString({0}));
}

TEST(DigitString, RejectsInvalidDigits) {
  EXPECT_THROW(DigitString(std::vector<std::uint8_t>{}), std::invalid_argument);
  EXPECT_THROW(DigitString(std::vector<std::uint8_t>{3, 10}), std::invalid_argument);
}

TEST(Normalize, StripsLeadingZerosOnly) {
  EXPECT_EQ(normalize(parseOperand("00120")).str(), "120");
  EXPECT_EQ(normalize(parseOperand("000")).str(), "0");
}

TEST(PadToLength, Examples) {
  EXPECT_EQ(digitsOf(padToLength(DigitString({7}), 3)), (std::vector<std::uint8_t>{7, 0, 0}));
  EXPECT_EQ(digitsOf(padToLength(DigitString({3, 2, 1}), 3)), (std::vector<std::uint8_t>{3, 2, 1}));
  EXPECT_THROW(padToLength(DigitString({3, 2, 1}), 2), LengthError);
}

TEST(PadToLength, ValueNeutral) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> extra(0, 12);
  for (int i = 0; i < 100; ++i) {
    const std::string text = oracle::randomNumber(rng, 1, 20);
    const DigitString d = parseOperand(text);
    const DigitString padded = padToLength(d, d.size() + extra(rng));
    EXPECT_EQ(asOracle(valueOf(padded)), oracle::value(text));
    for (std::size_t k = 0; k < d.size(); ++k) EXPECT_EQ(padded.at(k), d.at(k));
  }
}

TEST(Duplex, Examples) {
  EXPECT_EQ(duplex(DigitString({4})), 16);
  EXPECT_EQ(duplex(DigitString({3, 2})), 12);     // "23": 2·(2·3)
  EXPECT_EQ(duplex(DigitString({5, 4, 3})), 46);  // "345": 2·(3·5) + 4²
}

TEST(Duplex, MatchesBruteForceDoubleSumUpToSixDigits) {
  // Exhaustive up to 4 digits, sampled for 5 and 6.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> digit(0, 9);
  for (std::size_t len = 1; len <= 6; ++len) {
    const std::size_t total = len <= 4 ? static_cast<std::size_t>(std::pow(10, len)) : 5000;
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<unsigned> ds(len);
      std::size_t v = n;
      for (auto& d : ds) {
        if (len <= 4) {
          d = static_cast<unsigned>(v % 10);
          v /= 10;
        } else {
          d = digit(rng);
        }
      }
      std::vector<std::uint8_t> bytes(ds.begin(), ds.end());
      ASSERT_EQ(duplex(DigitString(bytes)), oracle::bruteDuplex(ds));
    }
  }
}

TEST(TensComplement, Examples) {
  EXPECT_EQ(tensComplement(DigitString({7}), 1).str(), "3");
  EXPECT_EQ(tensComplement(DigitString({0}), 3).str(), "1000");
  EXPECT_EQ(asOracle(valueOf(tensComplement(DigitString({6, 5, 4}), 3))), oracle::Int(1000 - 456));
  EXPECT_EQ(tensComplement(parseOperand("120"), 4).str(), "9880");  // trailing zero stays zero
}

TEST(TensComplement, RejectsNarrowWidth) {
  EXPECT_THROW(tensComplement(parseOperand("456"), 2), LengthError);
  EXPECT_THROW(tensComplement(parseOperand("0"), 0), LengthError);
  EXPECT_NO_THROW(tensComplement(parseOperand("0456"), 3));
}

TEST(TensComplement, SumsToPowerOfTen) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> extra(0, 5);
  for (int i = 0; i < 300; ++i) {
    const std::string text = oracle::randomNumber(rng, 1, 15);
    const DigitString d = parseOperand(text);
    const std::size_t w = normalize(d).size() + extra(rng);
    const DigitString c = tensComplement(d, w);
    EXPECT_EQ(oracle::value(text) + asOracle(valueOf(c)), oracle::pow10(static_cast<unsigned>(w))) << text;
    EXPECT_EQ(c.size(), d.isZero() ? w + 1 : w);
  }
}
