#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "liexp/error.hpp"

namespace liexp::detail {

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t offset = 0;
};

// Tokenizer shared by the polynomial and UEA expression grammars.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  bool accept(char symbol) {
    if (cur_.kind == Tok::Symbol && cur_.text[0] == symbol) {
      advance();
      return true;
    }
    return false;
  }

  bool at_symbol(char symbol) const { return cur_.kind == Tok::Symbol && cur_.text[0] == symbol; }

  void expect(char symbol) {
    if (!accept(symbol)) fail(std::string("expected '") + symbol + "'", cur_.offset);
  }

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, offset, line, col);
  }

  [[noreturn]] void fail_here(const std::string& what) const {
    fail(what + (cur_.kind == Tok::End ? " (end of input)" : " near '" + cur_.text + "'"),
         cur_.offset);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_ = Token{};
    cur_.offset = pos_;
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      cur_.kind = Tok::Number;
      cur_.text = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      cur_.kind = Tok::Ident;
      cur_.text = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
    } else if (std::string_view("+-*/^()[],<>=").find(c) != std::string_view::npos) {
      cur_.kind = Tok::Symbol;
      cur_.text = std::string(1, c);
      ++pos_;
    } else {
      fail(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
};

}  // namespace liexp::detail
