#include "varlam/syntax.hpp"

#include <sstream>

#include "lexer.hpp"
#include "varlam/env.hpp"
#include "varlam/error.hpp"
#include "varlam/prelude.hpp"

namespace varlam {

using detail::Lexer;
using detail::Tok;
using detail::Token;

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Env* env) : lex_(src), env_(env) {}

  Term parse_all() {
    Term t = term();
    expect(Tok::End);
    return t;
  }

 private:
  Token expect(Tok kind) {
    const Token& t = lex_.peek();
    if (t.kind != kind)
      throw ParseError(t.offset, std::string("expected ") + detail::token_name(kind) + ", found " +
                                     detail::token_name(t.kind));
    return lex_.next();
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Lower || k == Tok::Upper || k == Tok::Numeral || k == Tok::LParen;
  }

  Term term() {
    if (lex_.peek().kind == Tok::Lambda) return abstraction();
    return application();
  }

  Term abstraction() {
    expect(Tok::Lambda);
    std::vector<std::string> binders;
    binders.push_back(expect(Tok::Lower).text);
    while (lex_.peek().kind == Tok::Lower) binders.push_back(lex_.next().text);
    expect(Tok::Dot);
    return lambdas(binders, term());
  }

  Term application() {
    if (!starts_atom(lex_.peek().kind))
      throw ParseError(lex_.peek().offset,
                       std::string("expected a term, found ") + detail::token_name(lex_.peek().kind));
    Term head = atom();
    while (true) {
      Tok k = lex_.peek().kind;
      if (starts_atom(k)) {
        head = Term::app(std::move(head), atom());
      } else if (k == Tok::Lambda) {
        // a trailing abstraction extends to the end, as in `f \x.x`
        head = Term::app(std::move(head), abstraction());
        break;
      } else {
        break;
      }
    }
    return head;
  }

  Term atom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Lower:
        return Term::var(t.text);
      case Tok::Upper:
        if (env_ && !env_->contains(t.text))
          throw Error(ErrorCode::UnboundName, "unbound name " + t.text);
        return Term::constant(t.text);
      case Tok::Numeral: {
        unsigned long n = 0;
        try {
          n = std::stoul(t.text);
        } catch (const std::exception&) {
          throw ParseError(t.offset, "numeral out of range");
        }
        if (n > 100000) throw ParseError(t.offset, "numeral out of range");
        return church(static_cast<unsigned>(n));
      }
      case Tok::LParen: {
        Term inner = term();
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw ParseError(t.offset, std::string("unexpected ") + detail::token_name(t.kind));
    }
  }

  Lexer lex_;
  const Env* env_;
};

void print_rec(const Term& t, bool sugar, std::ostringstream& out);

void print_atomic(const Term& t, bool sugar, std::ostringstream& out) {
  bool bare = t.is_var() || t.is_const() || (sugar && t.is_lam() && numeral_value(t));
  if (bare) {
    print_rec(t, sugar, out);
  } else {
    out << '(';
    print_rec(t, sugar, out);
    out << ')';
  }
}

void print_rec(const Term& t, bool sugar, std::ostringstream& out) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      out << t.name();
      return;
    case TermKind::Lam: {
      if (sugar) {
        if (auto n = numeral_value(t)) {
          out << '#' << *n;
          return;
        }
      }
      std::vector<const std::string*> binders;
      const Term* body = &t;
      while (body->is_lam() && !(sugar && !binders.empty() && numeral_value(*body))) {
        binders.push_back(&body->name());
        body = &body->body();
      }
      out << '\\';
      for (std::size_t i = 0; i < binders.size(); ++i) out << (i ? " " : "") << *binders[i];
      out << (binders.size() > 1 ? ". " : ".");
      print_rec(*body, sugar, out);
      return;
    }
    case TermKind::App: {
      std::vector<const Term*> args;
      const Term* head = &t;
      while (head->is_app()) {
        args.push_back(&head->arg());
        head = &head->fun();
      }
      print_atomic(*head, sugar, out);
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        out << ' ';
        print_atomic(**it, sugar, out);
      }
      return;
    }
  }
}

}  // namespace

Term parse(std::string_view source, const Env* env) { return Parser(source, env).parse_all(); }

std::vector<Definition> split_definitions(std::string_view source) {
  std::vector<Definition> defs;
  Lexer lex(source);
  while (lex.peek().kind != Tok::End) {
    Token name = lex.next();
    if (name.kind != Tok::Upper)
      throw ParseError(name.offset, "expected a definition name (uppercase identifier)");
    Token def = lex.next();
    if (def.kind != Tok::Define) throw ParseError(def.offset, "expected ':='");
    std::size_t start = lex.peek().offset;
    while (lex.peek().kind != Tok::Semicolon) {
      if (lex.peek().kind == Tok::End)
        throw ParseError(lex.peek().offset, "unterminated definition of " + name.text);
      lex.next();
    }
    std::size_t end = lex.next().offset;
    defs.push_back({name.text, std::string(source.substr(start, end - start)), name.offset});
  }
  return defs;
}

std::string print(const Term& t, bool sugar) {
  std::ostringstream out;
  print_rec(t, sugar, out);
  return out.str();
}

std::optional<unsigned> numeral_value(const Term& t) {
  if (!t.is_lam()) return std::nullopt;
  const std::string& s = t.name();
  const Term& inner = t.body();
  if (inner.is_var()) {
    if (inner.name() == s) return 1u;  // η-short c_1
    return std::nullopt;
  }
  if (!inner.is_lam()) return std::nullopt;
  const std::string& z = inner.name();
  const Term* body = &inner.body();
  unsigned n = 0;
  while (body->is_app()) {
    if (s == z || !body->fun().is_var() || body->fun().name() != s) return std::nullopt;
    ++n;
    body = &body->arg();
  }
  if (!body->is_var() || body->name() != z) return std::nullopt;
  return n;
}

}  // namespace varlam
