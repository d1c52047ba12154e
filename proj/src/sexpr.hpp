#pragma once

// Shared tokenizer for the term and tree s-expression grammars.

#include <cctype>
#include <string>
#include <string_view>

#include "aronszajn/errors.hpp"

namespace aronszajn::detail {

class SexprLexer {
 public:
  explicit SexprLexer(std::string_view text) : text_(text) {}

  /// "(", ")" or an atom token; empty at end of input.
  std::string_view peek() {
    skip_space();
    if (pos_ >= text_.size()) return {};
    if (text_[pos_] == '(' || text_[pos_] == ')') return text_.substr(pos_, 1);
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
           text_[end] != '(' && text_[end] != ')') {
      ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  std::string_view next() {
    auto tok = peek();
    pos_ += tok.size();
    return tok;
  }

  void expect(std::string_view tok) {
    auto got = next();
    if (got != tok) {
      throw InputError("expected '" + std::string(tok) + "' but found " + describe(got));
    }
  }

  bool at_end() { return peek().empty(); }

  static std::string describe(std::string_view tok) {
    return tok.empty() ? std::string("end of input") : "'" + std::string(tok) + "'";
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace aronszajn::detail
