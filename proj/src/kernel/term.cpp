#include "varlam/term.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "varlam/error.hpp"

namespace varlam {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::optional<Term> left;   // body for Lam, function for App
  std::optional<Term> right;  // argument for App
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), {}, {}}));
}

Term Term::lam(std::string binder, Term body) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Lam, std::move(binder), std::move(body), {}}));
}

Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::App, std::string{}, std::move(fun), std::move(arg)}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{TermKind::Const, std::move(name), {}, {}}));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }

const Term& Term::body() const {
  assert(is_lam());
  return *node_->left;
}

const Term& Term::fun() const {
  assert(is_app());
  return *node_->left;
}

const Term& Term::arg() const {
  assert(is_app());
  return *node_->right;
}

Term apply_args(Term f, const std::vector<Term>& args) {
  for (const auto& a : args) f = Term::app(std::move(f), a);
  return f;
}

Term lambdas(const std::vector<std::string>& binders, Term body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(*it, std::move(body));
  return body;
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      return;
    case TermKind::Const:
      return;
    case TermKind::Lam:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case TermKind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const Term& t, std::string_view name) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == name;
    case TermKind::Const:
      return false;
    case TermKind::Lam:
      return t.name() != name && occurs_free(t.body(), name);
    case TermKind::App:
      return occurs_free(t.fun(), name) || occurs_free(t.arg(), name);
  }
  return false;
}

std::size_t size(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return 1;
    case TermKind::Const:
      throw Error(ErrorCode::UnexpandedConstant, "size of unexpanded constant " + t.name());
    case TermKind::Lam:
      return 1 + size(t.body());
    case TermKind::App:
      return 1 + size(t.fun()) + size(t.arg());
  }
  return 0;
}

std::size_t leaf_size(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return 1;
    case TermKind::Lam:
      return 1 + leaf_size(t.body());
    case TermKind::App:
      return 1 + leaf_size(t.fun()) + leaf_size(t.arg());
  }
  return 0;
}

namespace {

// Binder stacks grow in lockstep; a bound variable is identified by the depth
// of its innermost binder.
long binding_depth(const std::vector<const std::string*>& stack, const std::string& name) {
  for (std::size_t i = stack.size(); i-- > 0;)
    if (*stack[i] == name) return static_cast<long>(i);
  return -1;
}

bool alpha_eq_rec(const Term& a, const Term& b, std::vector<const std::string*>& sa,
                  std::vector<const std::string*>& sb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      long da = binding_depth(sa, a.name());
      long db = binding_depth(sb, b.name());
      if (da != db) return false;
      return da >= 0 || a.name() == b.name();
    }
    case TermKind::Const:
      return a.name() == b.name();
    case TermKind::Lam: {
      sa.push_back(&a.name());
      sb.push_back(&b.name());
      bool eq = alpha_eq_rec(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return eq;
    }
    case TermKind::App:
      return alpha_eq_rec(a.fun(), b.fun(), sa, sb) && alpha_eq_rec(a.arg(), b.arg(), sa, sb);
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<const std::string*> sa;
  std::vector<const std::string*> sb;
  return alpha_eq_rec(a, b, sa, sb);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string candidate = base;
  while (taken.count(candidate)) candidate += '\'';
  return candidate;
}

Term substitute(const Term& t, std::string_view v, const Term& r) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == v ? r : t;
    case TermKind::Const:
      return t;
    case TermKind::App: {
      Term f = substitute(t.fun(), v, r);
      Term a = substitute(t.arg(), v, r);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case TermKind::Lam: {
      if (t.name() == v || !occurs_free(t.body(), v)) return t;
      if (!occurs_free(r, t.name())) return Term::lam(t.name(), substitute(t.body(), v, r));
      std::set<std::string> taken = free_vars(r);
      auto body_free = free_vars(t.body());
      taken.insert(body_free.begin(), body_free.end());
      taken.insert(std::string(v));
      std::string renamed = fresh_name(t.name(), taken);
      Term body = substitute(t.body(), t.name(), Term::var(renamed));
      return Term::lam(renamed, substitute(body, v, r));
    }
  }
  return t;
}

bool contains_const(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return false;
    case TermKind::Const:
      return true;
    case TermKind::Lam:
      return contains_const(t.body());
    case TermKind::App:
      return contains_const(t.fun()) || contains_const(t.arg());
  }
  return false;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnboundName: return "UnboundName";
    case ErrorCode::UnexpandedConstant: return "UnexpandedConstant";
    case ErrorCode::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorCode::OpenDefinition: return "OpenDefinition";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::UnknownSequence: return "UnknownSequence";
    case ErrorCode::MixedSequenceUse: return "MixedSequenceUse";
    case ErrorCode::NotANumeral: return "NotANumeral";
    case ErrorCode::Reduction: return "ReductionError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace varlam
