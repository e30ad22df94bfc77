#include "lexer.hpp"

#include <cctype>

#include "varlam/error.hpp"
#include "varlam/syntax.hpp"

namespace varlam {

bool is_lower_ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper_ident_start(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

namespace detail {

void Lexer::skip_space() {
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
    } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
}

void Lexer::advance() {
  skip_space();
  std::size_t start = pos_;
  if (pos_ >= src_.size()) {
    current_ = {Tok::End, {}, start};
    return;
  }
  char c = src_[pos_];
  auto single = [&](Tok kind) {
    ++pos_;
    current_ = {kind, std::string(1, c), start};
  };
  switch (c) {
    case '\\': return single(Tok::Lambda);
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case '[': return single(Tok::LBracket);
    case ']': return single(Tok::RBracket);
    case ';': return single(Tok::Semicolon);
    case '.':
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
        pos_ += 2;
        current_ = {Tok::DotDot, "..", start};
        return;
      }
      return single(Tok::Dot);
    case ':':
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        pos_ += 2;
        current_ = {Tok::Define, ":=", start};
        return;
      }
      throw ParseError(start, "expected ':='");
    case '#': {
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == digits) throw ParseError(start, "expected digits after '#'");
      current_ = {Tok::Numeral, std::string(src_.substr(digits, pos_ - digits)), start};
      return;
    }
    default:
      break;
  }
  // UTF-8 λ (U+03BB)
  if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
      static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
    pos_ += 2;
    current_ = {Tok::Lambda, "\\", start};
    return;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    current_ = {Tok::Number, std::string(src_.substr(start, pos_ - start)), start};
    return;
  }
  if (is_lower_ident_start(c) || is_upper_ident_start(c)) {
    ++pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    current_ = {is_upper_ident_start(c) ? Tok::Upper : Tok::Lower,
                std::string(src_.substr(start, pos_ - start)), start};
    return;
  }
  throw ParseError(start, std::string("unexpected character '") + c + "'");
}

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::DotDot: return "'..'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Lower: return "identifier";
    case Tok::Upper: return "constant name";
    case Tok::Numeral: return "numeral";
    case Tok::Number: return "number";
    case Tok::Define: return "':='";
    case Tok::Semicolon: return "';'";
    case Tok::End: return "end of input";
  }
  return "token";
}

}  // namespace detail
}  // namespace varlam
