#include <map>
#include <set>
#include <sstream>

#include "../kernel/lexer.hpp"
#include "varlam/error.hpp"
#include "varlam/metagen.hpp"
#include "varlam/prelude.hpp"

namespace varlam {

using detail::Lexer;
using detail::Tok;
using detail::Token;

MetaTerm MetaTerm::var(std::string name) {
  MetaTerm m{Kind::Var, std::move(name), {}, nullptr, {}, {}};
  return m;
}

MetaTerm MetaTerm::constant(std::string name) {
  MetaTerm m{Kind::Const, std::move(name), {}, nullptr, {}, {}};
  return m;
}

MetaTerm MetaTerm::lam(std::vector<Binder> binders, MetaTerm body) {
  MetaTerm m{Kind::Lam, {}, std::move(binders), std::make_shared<const MetaTerm>(std::move(body)), {}, {}};
  return m;
}

MetaTerm MetaTerm::app(Arg head, std::vector<Arg> args) {
  MetaTerm m{Kind::App, {}, {}, nullptr, std::move(head), std::move(args)};
  return m;
}

MetaTerm::Arg MetaTerm::plain(MetaTerm t) {
  return Arg{std::nullopt, std::make_shared<const MetaTerm>(std::move(t))};
}

MetaTerm::Arg MetaTerm::splice_of(std::string seq) { return Arg{std::move(seq), nullptr}; }

namespace {

class MetaParser {
 public:
  explicit MetaParser(std::string_view src) : lex_(src) {}

  MetaTerm parse_all() {
    MetaTerm t = term();
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

  // After an identifier: `[1..n]`, returning the index variable.
  std::optional<std::string> range_suffix() {
    if (lex_.peek().kind != Tok::LBracket) return std::nullopt;
    lex_.next();
    Token one = expect(Tok::Number);
    if (one.text != "1") throw ParseError(one.offset, "sequence ranges must start at 1");
    expect(Tok::DotDot);
    Token idx = expect(Tok::Lower);
    expect(Tok::RBracket);
    return idx.text;
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Lower || k == Tok::Upper || k == Tok::Numeral || k == Tok::LParen;
  }

  MetaTerm term() {
    if (lex_.peek().kind == Tok::Lambda) return abstraction();
    return application();
  }

  MetaTerm abstraction() {
    expect(Tok::Lambda);
    std::vector<MetaTerm::Binder> binders;
    do {
      Token name = expect(Tok::Lower);
      binders.push_back({name.text, range_suffix()});
    } while (lex_.peek().kind == Tok::Lower);
    expect(Tok::Dot);
    return MetaTerm::lam(std::move(binders), term());
  }

  MetaTerm application() {
    if (!starts_atom(lex_.peek().kind))
      throw ParseError(lex_.peek().offset,
                       std::string("expected a term, found ") + detail::token_name(lex_.peek().kind));
    MetaTerm::Arg head = atom();
    std::vector<MetaTerm::Arg> args;
    while (true) {
      Tok k = lex_.peek().kind;
      if (starts_atom(k)) {
        args.push_back(atom());
      } else if (k == Tok::Lambda) {
        args.push_back(MetaTerm::plain(abstraction()));
        break;
      } else {
        break;
      }
    }
    if (args.empty() && !head.is_splice()) return *head.term;
    return MetaTerm::app(std::move(head), std::move(args));
  }

  MetaTerm::Arg atom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Lower:
        if (auto idx = range_suffix()) {
          (void)idx;
          return MetaTerm::splice_of(t.text);
        }
        return MetaTerm::plain(MetaTerm::var(t.text));
      case Tok::Upper:
        return MetaTerm::plain(MetaTerm::constant(t.text));
      case Tok::Numeral: {
        unsigned long n = std::stoul(t.text);
        if (n > 100000) throw ParseError(t.offset, "numeral out of range");
        return MetaTerm::plain(meta_from_term(church(static_cast<unsigned>(n))));
      }
      case Tok::LParen: {
        MetaTerm inner = term();
        expect(Tok::RParen);
        return MetaTerm::plain(std::move(inner));
      }
      default:
        throw ParseError(t.offset, std::string("unexpected ") + detail::token_name(t.kind));
    }
  }

  Lexer lex_;
};

void collect_indices(const MetaTerm& m, std::set<std::string>& out) {
  switch (m.kind) {
    case MetaTerm::Kind::Var:
    case MetaTerm::Kind::Const:
      return;
    case MetaTerm::Kind::Lam:
      for (const auto& b : m.binders)
        if (b.index) out.insert(*b.index);
      collect_indices(*m.body, out);
      return;
    case MetaTerm::Kind::App:
      if (!m.head.is_splice()) collect_indices(*m.head.term, out);
      for (const auto& a : m.args)
        if (!a.is_splice()) collect_indices(*a.term, out);
      return;
  }
}

void collect_names(const MetaTerm& m, std::set<std::string>& out) {
  switch (m.kind) {
    case MetaTerm::Kind::Var:
      out.insert(m.name);
      return;
    case MetaTerm::Kind::Const:
      return;
    case MetaTerm::Kind::Lam:
      for (const auto& b : m.binders) out.insert(b.name);
      collect_names(*m.body, out);
      return;
    case MetaTerm::Kind::App:
      if (!m.head.is_splice()) collect_names(*m.head.term, out);
      for (const auto& a : m.args)
        if (!a.is_splice()) collect_names(*a.term, out);
      return;
  }
}

class Expander {
 public:
  Expander(const MetaTerm& root, unsigned n) : n_(n) { collect_names(root, taken_); }

  Term run(const MetaTerm& m) {
    switch (m.kind) {
      case MetaTerm::Kind::Var:
        return Term::var(m.name);
      case MetaTerm::Kind::Const:
        return Term::constant(m.name);
      case MetaTerm::Kind::Lam: {
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::optional<std::vector<std::string>>>> saved;
        for (const auto& b : m.binders) {
          if (!b.is_sequence()) {
            names.push_back(b.name);
            continue;
          }
          std::vector<std::string> concrete;
          for (unsigned i = 1; i <= n_; ++i) {
            std::string c = fresh_name(b.name + std::to_string(i), taken_);
            taken_.insert(c);
            concrete.push_back(c);
            names.push_back(c);
          }
          auto it = seqs_.find(b.name);
          saved.emplace_back(b.name, it == seqs_.end() ? std::nullopt
                                                       : std::optional(it->second));
          seqs_[b.name] = std::move(concrete);
        }
        // a single binder with the same name as a sequence shadows it
        for (const auto& b : m.binders) {
          if (b.is_sequence()) continue;
          auto it = seqs_.find(b.name);
          if (it != seqs_.end()) {
            saved.emplace_back(b.name, it->second);
            seqs_.erase(it);
          }
        }
        Term body = run(*m.body);
        for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
          if (it->second)
            seqs_[it->first] = *it->second;
          else
            seqs_.erase(it->first);
        }
        return lambdas(names, std::move(body));
      }
      case MetaTerm::Kind::App: {
        Term head = [&] {
          if (!m.head.is_splice()) return run(*m.head.term);
          const auto& xs = sequence(*m.head.splice);
          if (xs.empty()) return Term::lam("x", Term::var("x"));
          Term chain = Term::var(xs[0]);
          for (std::size_t i = 1; i < xs.size(); ++i) chain = Term::app(chain, Term::var(xs[i]));
          return chain;
        }();
        for (const auto& a : m.args) {
          if (a.is_splice()) {
            for (const auto& x : sequence(*a.splice)) head = Term::app(head, Term::var(x));
          } else {
            head = Term::app(head, run(*a.term));
          }
        }
        return head;
      }
    }
    return Term::var("?");
  }

 private:
  const std::vector<std::string>& sequence(const std::string& name) const {
    auto it = seqs_.find(name);
    if (it == seqs_.end()) throw Error(ErrorCode::UnknownSequence, "unknown sequence " + name);
    return it->second;
  }

  unsigned n_;
  std::set<std::string> taken_;
  std::map<std::string, std::vector<std::string>> seqs_;
};

void print_meta_rec(const MetaTerm& m, std::ostringstream& out);

void print_meta_arg(const MetaTerm::Arg& a, const std::string& index, std::ostringstream& out) {
  if (a.is_splice()) {
    out << *a.splice << "[1.." << index << "]";
    return;
  }
  const MetaTerm& t = *a.term;
  if (t.kind == MetaTerm::Kind::Var || t.kind == MetaTerm::Kind::Const) {
    print_meta_rec(t, out);
  } else {
    out << '(';
    print_meta_rec(t, out);
    out << ')';
  }
}

void print_meta_rec(const MetaTerm& m, std::ostringstream& out) {
  std::string index = index_variable(m).value_or("n");
  switch (m.kind) {
    case MetaTerm::Kind::Var:
    case MetaTerm::Kind::Const:
      out << m.name;
      return;
    case MetaTerm::Kind::Lam:
      out << '\\';
      for (std::size_t i = 0; i < m.binders.size(); ++i) {
        if (i) out << ' ';
        out << m.binders[i].name;
        if (m.binders[i].index) out << "[1.." << *m.binders[i].index << "]";
      }
      out << (m.binders.size() > 1 ? ". " : ".");
      print_meta_rec(*m.body, out);
      return;
    case MetaTerm::Kind::App:
      print_meta_arg(m.head, index, out);
      for (const auto& a : m.args) {
        out << ' ';
        print_meta_arg(a, index, out);
      }
      return;
  }
}

}  // namespace

MetaTerm parse_meta(std::string_view source) { return MetaParser(source).parse_all(); }

MetaTerm meta_from_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return MetaTerm::var(t.name());
    case TermKind::Const:
      return MetaTerm::constant(t.name());
    case TermKind::Lam:
      return MetaTerm::lam({{t.name(), std::nullopt}}, meta_from_term(t.body()));
    case TermKind::App:
      return MetaTerm::app(MetaTerm::plain(meta_from_term(t.fun())),
                           {MetaTerm::plain(meta_from_term(t.arg()))});
  }
  return MetaTerm::var("?");
}

std::string print_meta(const MetaTerm& m) {
  std::ostringstream out;
  print_meta_rec(m, out);
  return out.str();
}

std::optional<std::string> index_variable(const MetaTerm& m) {
  std::set<std::string> found;
  collect_indices(m, found);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw Error(ErrorCode::InvalidArgument, "meta-term uses more than one index variable");
  return *found.begin();
}

Term expand(const MetaTerm& m, unsigned n) {
  index_variable(m);
  Expander e(m, n);
  return e.run(m);
}

const std::vector<BuiltinMeta>& builtin_meta_terms() {
  static const std::vector<BuiltinMeta> table = {
      {"I", "\\x[1..n]. x[1..n]"},
      {"K", "\\p x[1..n]. p"},
      {"S", "\\p q x[1..n]. p x[1..n] (q x[1..n])"},
      {"B", "\\p q x[1..n]. p (q x[1..n])"},
      {"C", "\\p q x[1..n]. p x[1..n] q"},
      {"D", "\\x[1..n]. x[1..n] (x[1..n])"},
      {"NtupMaker", "\\x[1..n] s. s x[1..n]"},
  };
  return table;
}

}  // namespace varlam
