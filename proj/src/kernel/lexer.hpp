#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace varlam::detail {

enum class Tok {
  Lambda,
  Dot,
  DotDot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Lower,
  Upper,
  Numeral,  // #digits
  Number,   // bare digits (meta-term ranges)
  Define,   // :=
  Semicolon,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

// Tokenizer shared by the term, meta-term and definition-file grammars.
// `--` starts a comment that runs to end of line.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }
  Token next() {
    Token t = current_;
    advance();
    return t;
  }
  std::string_view source() const { return src_; }

 private:
  void advance();
  void skip_space();

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, {}, 0};
};

const char* token_name(Tok t);

}  // namespace varlam::detail
