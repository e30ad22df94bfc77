#include "varlam/bracket.hpp"

#include <memory>

#include "varlam/error.hpp"

namespace varlam {

namespace {

// Binary applicative tree. A Head splice is the chain x1 ... xn as a term
// (the identity when n = 0); a Spread splice is x1 ... xn as trailing
// arguments and only appears as the right child of an App.
struct Node;
using Ref = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Var, Const, App, Head, Spread };
  Kind kind;
  std::string name;
  Ref left, right;
};

Ref mk(Node::Kind k, std::string name) {
  return std::make_shared<const Node>(Node{k, std::move(name), nullptr, nullptr});
}
Ref var(std::string name) { return mk(Node::Kind::Var, std::move(name)); }
Ref cst(std::string name) { return mk(Node::Kind::Const, std::move(name)); }
Ref app(Ref f, Ref a) {
  return std::make_shared<const Node>(Node{Node::Kind::App, {}, std::move(f), std::move(a)});
}

bool mentions_var(const Ref& t, const std::string& x) {
  switch (t->kind) {
    case Node::Kind::Var: return t->name == x;
    case Node::Kind::App: return mentions_var(t->left, x) || mentions_var(t->right, x);
    default: return false;
  }
}

bool mentions_seq(const Ref& t, const std::string& x) {
  switch (t->kind) {
    case Node::Kind::Head:
    case Node::Kind::Spread: return t->name == x;
    case Node::Kind::App: return mentions_seq(t->left, x) || mentions_seq(t->right, x);
    default: return false;
  }
}

Ref abstract_var(const std::string& x, const Ref& t) {
  if (!mentions_var(t, x)) return app(cst("K"), t);
  if (t->kind == Node::Kind::Var) return cst("I");
  // only App remains: x occurs somewhere below
  const Ref& p = t->left;
  const Ref& q = t->right;
  if (q->kind == Node::Kind::Var && q->name == x && !mentions_var(p, x)) return p;
  if (q->kind == Node::Kind::Spread)
    throw Error(ErrorCode::MixedSequenceUse,
                "cannot abstract " + x + " over a term applied to the sequence " + q->name);
  bool in_p = mentions_var(p, x);
  bool in_q = mentions_var(q, x);
  if (in_p && in_q) return app(app(cst("S"), abstract_var(x, p)), abstract_var(x, q));
  if (in_p) return app(app(cst("C"), abstract_var(x, p)), q);
  return app(app(cst("B"), p), abstract_var(x, q));
}

Ref abstract_seq(const std::string& x, const std::string& n, const Ref& t) {
  auto variadic = [&](const char* c) { return app(cst(c), var(n)); };
  if (!mentions_seq(t, x)) return app(variadic("VarK"), t);
  if (t->kind == Node::Kind::Head) return variadic("VarI");
  if (t->kind != Node::Kind::App)
    throw Error(ErrorCode::MixedSequenceUse, "sequence " + x + " used outside an application");
  const Ref& p = t->left;
  const Ref& q = t->right;
  if (q->kind == Node::Kind::Spread) {
    if (q->name == x && !mentions_seq(p, x)) return p;
    throw Error(ErrorCode::MixedSequenceUse,
                "sequence " + x + " is applied to a spread of " + q->name);
  }
  bool in_p = mentions_seq(p, x);
  bool in_q = mentions_seq(q, x);
  if (in_p && in_q)
    return app(app(variadic("VarS"), abstract_seq(x, n, p)), abstract_seq(x, n, q));
  if (in_p) return app(app(variadic("VarC"), abstract_seq(x, n, p)), q);
  return app(app(variadic("VarB"), p), abstract_seq(x, n, q));
}

class Compiler {
 public:
  explicit Compiler(std::string index) : index_(std::move(index)) {}

  Ref run(const MetaTerm& m) {
    switch (m.kind) {
      case MetaTerm::Kind::Var: return var(m.name);
      case MetaTerm::Kind::Const: return cst(m.name);
      case MetaTerm::Kind::Lam: {
        Ref body = run(*m.body);
        for (auto it = m.binders.rbegin(); it != m.binders.rend(); ++it)
          body = it->is_sequence() ? abstract_seq(it->name, index_, body)
                                   : abstract_var(it->name, body);
        return body;
      }
      case MetaTerm::Kind::App: {
        Ref out = m.head.is_splice() ? mk(Node::Kind::Head, *m.head.splice) : run(*m.head.term);
        for (const auto& a : m.args)
          out = app(out, a.is_splice() ? mk(Node::Kind::Spread, *a.splice) : run(*a.term));
        return out;
      }
    }
    return nullptr;
  }

 private:
  std::string index_;
};

Term to_term(const Ref& t) {
  switch (t->kind) {
    case Node::Kind::Var: return Term::var(t->name);
    case Node::Kind::Const: return Term::constant(t->name);
    case Node::Kind::App: return Term::app(to_term(t->left), to_term(t->right));
    case Node::Kind::Head:
    case Node::Kind::Spread:
      throw Error(ErrorCode::UnknownSequence, "sequence " + t->name + " is not bound");
  }
  return Term::var("?");
}

}  // namespace

Term turner(const Term& t) { return to_term(Compiler("n").run(meta_from_term(t))); }

Term extended(const MetaTerm& m) {
  std::string n = index_variable(m).value_or("n");
  return to_term(Compiler(n).run(m));
}

Term extended_closed(const MetaTerm& m) {
  std::string n = index_variable(m).value_or("n");
  return Term::lam(n, to_term(Compiler(n).run(m)));
}

}  // namespace varlam
