#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sutra/numeral.hpp"

namespace sutra::expr {

// Operator glyphs used in latent-operation expressions (UTF-8).
inline constexpr std::string_view kTimes = "\xC3\x97";   // ×
inline constexpr std::string_view kMinus = "\xE2\x88\x92";  // −
inline constexpr std::string_view kDivide = "\xC3\xB7";  // ÷ (floor division)

enum class TokenKind { Number, Plus, Minus, Times, Divide, LParen, RParen };

struct Token {
  TokenKind kind;
  ExactValue number;  // Number only
};

// Splits an expression into tokens. Returns nullopt on any character outside
// digits, spaces, parentheses and the four operator glyphs. ASCII '+' is the
// only plus; '-', '*' and '/' are accepted as aliases for the other three.
inline std::optional<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c >= '0' && c <= '9') {
      ExactValue v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      out.push_back({TokenKind::Number, v});
    } else if (c == '+') {
      out.push_back({TokenKind::Plus, 0});
      ++i;
    } else if (c == '(') {
      out.push_back({TokenKind::LParen, 0});
      ++i;
    } else if (c == ')') {
      out.push_back({TokenKind::RParen, 0});
      ++i;
    } else if (c == '-') {
      out.push_back({TokenKind::Minus, 0});
      ++i;
    } else if (c == '*') {
      out.push_back({TokenKind::Times, 0});
      ++i;
    } else if (c == '/') {
      out.push_back({TokenKind::Divide, 0});
      ++i;
    } else if (text.substr(i).starts_with(kTimes)) {
      out.push_back({TokenKind::Times, 0});
      i += kTimes.size();
    } else if (text.substr(i).starts_with(kMinus)) {
      out.push_back({TokenKind::Minus, 0});
      i += kMinus.size();
    } else if (text.substr(i).starts_with(kDivide)) {
      out.push_back({TokenKind::Divide, 0});
      i += kDivide.size();
    } else {
      return std::nullopt;
    }
  }
  return out;
}

// Literal numbers of an expression in the order they appear.
inline std::optional<std::vector<ExactValue>> literals(std::string_view text) {
  auto tokens = tokenize(text);
  if (!tokens) return std::nullopt;
  std::vector<ExactValue> out;
  for (const auto& t : *tokens) {
    if (t.kind == TokenKind::Number) out.push_back(t.number);
  }
  return out;
}

namespace detail {

// Recursive descent over: expr := term (('+'|'−') term)* ;
// term := factor (('×'|'÷') factor)* ; factor := number | '(' expr ')'.
class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  std::optional<ExactValue> parse() {
    auto v = expression();
    if (!v || pos_ != tokens_.size()) return std::nullopt;
    return v;
  }

 private:
  bool peek(TokenKind k) const { return pos_ < tokens_.size() && tokens_[pos_].kind == k; }

  std::optional<ExactValue> expression() {
    auto lhs = term();
    while (lhs && (peek(TokenKind::Plus) || peek(TokenKind::Minus))) {
      bool plus = tokens_[pos_++].kind == TokenKind::Plus;
      auto rhs = term();
      if (!rhs) return std::nullopt;
      lhs = plus ? *lhs + *rhs : *lhs - *rhs;
    }
    return lhs;
  }

  std::optional<ExactValue> term() {
    auto lhs = factor();
    while (lhs && (peek(TokenKind::Times) || peek(TokenKind::Divide))) {
      bool times = tokens_[pos_++].kind == TokenKind::Times;
      auto rhs = factor();
      if (!rhs) return std::nullopt;
      if (times) {
        lhs = *lhs * *rhs;
      } else {
        if (*rhs == 0) return std::nullopt;
        ExactValue q = *lhs / *rhs;
        if ((*lhs % *rhs != 0) && ((*lhs < 0) != (*rhs < 0))) q -= 1;
        lhs = q;
      }
    }
    return lhs;
  }

  std::optional<ExactValue> factor() {
    if (peek(TokenKind::Number)) return tokens_[pos_++].number;
    if (peek(TokenKind::LParen)) {
      ++pos_;
      auto v = expression();
      if (!v || !peek(TokenKind::RParen)) return std::nullopt;
      ++pos_;
      return v;
    }
    return std::nullopt;
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Evaluates an expression exactly; nullopt when it is malformed or divides by
// zero.
inline std::optional<ExactValue> evaluate(std::string_view text) {
  auto tokens = tokenize(text);
  if (!tokens || tokens->empty()) return std::nullopt;
  return detail::Parser(*tokens).parse();
}

// True for exactly "<digit>×<digit>", the unit counted as one digit
// multiplication.
inline bool isDigitProduct(std::string_view text) {
  auto tokens = tokenize(text);
  return tokens && tokens->size() == 3 && (*tokens)[0].kind == TokenKind::Number &&
         (*tokens)[1].kind == TokenKind::Times && (*tokens)[2].kind == TokenKind::Number &&
         (*tokens)[0].number < 10 && (*tokens)[2].number < 10;
}

inline std::size_t countAdditions(std::string_view text) {
  auto tokens = tokenize(text);
  if (!tokens) return 0;
  std::size_t n = 0;
  for (const auto& t : *tokens) n += t.kind == TokenKind::Plus;
  return n;
}

}  // namespace sutra::expr
