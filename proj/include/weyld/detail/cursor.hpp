#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weyld {

/// Raised for any malformed textual partition, bipartition, label or class.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Minimal recursive-descent cursor over the label grammar.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail
}  // namespace weyld
