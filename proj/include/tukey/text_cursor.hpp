#pragma once

// Small scanning helper shared by the ordinal, set-expression and descriptor parsers.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "tukey/errors.hpp"

namespace tukey::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Consumes `token` (after whitespace) if it is next.
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::uint64_t natural() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) throw OverflowError("natural number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return value;
  }
  /// Identifier made of letters, digits and '_'.
  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t position() const noexcept { return pos_; }
  void reset(std::size_t pos) noexcept { pos_ = pos; }
  std::string_view text() const noexcept { return text_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace tukey::detail
