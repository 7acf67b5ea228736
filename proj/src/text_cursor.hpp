#pragma once

// Shared scanner for the word and presentation grammars.

#include <cctype>
#include <span>
#include <string>
#include <string_view>

#include "tautwist/word.hpp"

namespace tautwist::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[nodiscard]] bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  [[nodiscard]] char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected generator name");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      advance();
    }
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("exponent too large");
      advance();
    }
    return negative ? -value : value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

  /// product ('=' product)?
  Word equation(std::span<const std::string> names) {
    Word lhs = product(names);
    if (accept('=')) {
      Word rhs = product(names);
      return lhs * invert(rhs);
    }
    return lhs;
  }

  Word product(std::span<const std::string> names) {
    Word w = factor(names);
    while (accept('*')) w *= factor(names);
    return w;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  Word factor(std::span<const std::string> names) {
    Word w = atom(names);
    while (accept('^')) w = power(w, integer());
    return w;
  }

  Word atom(std::span<const std::string> names) {
    char c = peek();
    if (c == '(') {
      advance();
      Word w = product(names);
      expect(')');
      return w;
    }
    if (c == '1') {
      advance();
      return {};
    }
    std::size_t line = line_, column = column_;
    std::string name = identifier();
    for (std::size_t g = 0; g < names.size(); ++g)
      if (names[g] == name) return Word::generator(static_cast<std::uint32_t>(g));
    throw ParseError("undeclared generator '" + name + "'", line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace tautwist::detail
