#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "malleq/error.hpp"

namespace malleq::detail {

// Tiny recursive-descent helper shared by all the text formats.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  explicit Cursor(std::string_view t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool try_consume(std::string_view tok) {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!try_consume(tok)) fail("expected '" + std::string(tok) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // [A-Za-z_][A-Za-z0-9_]*
  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  // [A-Za-z0-9_]+  (labels may be purely numeric)
  std::string label() {
    skip_ws();
    if (pos >= text.size() || !ident_char(text[pos])) fail("expected label");
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  int integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected number");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number out of range");
      ++pos;
    }
    return static_cast<int>(v);
  }

  void expect_end() {
    if (!eof()) fail("trailing input");
  }
};

}  // namespace malleq::detail
