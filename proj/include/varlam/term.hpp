#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace varlam {

enum class TermKind { Var, Lam, App, Const };

// Immutable λ-term. Copies share structure; all operations build new terms.
class Term {
 public:
  static Term var(std::string name);
  static Term lam(std::string binder, Term body);
  static Term app(Term fun, Term arg);
  static Term constant(std::string name);

  TermKind kind() const;
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_lam() const { return kind() == TermKind::Lam; }
  bool is_app() const { return kind() == TermKind::App; }
  bool is_const() const { return kind() == TermKind::Const; }

  // Variable name, constant name, or binder name for abstractions.
  const std::string& name() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  // Pointer identity; cheap shortcut before structural comparison.
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// (f a1 ... an), left-associated.
Term apply_args(Term f, const std::vector<Term>& args);
// λb1 ... bn. body
Term lambdas(const std::vector<std::string>& binders, Term body);

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const Term& t, std::string_view name);

// Size of the abstract-syntax tree. Throws UnexpandedConstant on Const nodes.
std::size_t size(const Term& t);
// Same recursion, but every constant counts as a single leaf.
std::size_t leaf_size(const Term& t);

// α-equivalence; constants compare by name.
bool alpha_eq(const Term& a, const Term& b);

// Capture-avoiding t[v := r].
Term substitute(const Term& t, std::string_view v, const Term& r);

// Primes `base` until it is not in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

bool contains_const(const Term& t);

}  // namespace varlam
