#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varlam/term.hpp"

namespace varlam {

// A term of the ellipsis meta-language. `x[1..n]` as a binder stands for the
// binders x1 ... xn; as an argument (or head) it stands for the left-associated
// application of those variables.
struct MetaTerm {
  enum class Kind { Var, Lam, App, Const };

  struct Binder {
    std::string name;
    std::optional<std::string> index;  // set for sequence binders
    bool is_sequence() const { return index.has_value(); }
  };

  struct Arg {
    std::optional<std::string> splice;  // sequence name, or
    std::shared_ptr<const MetaTerm> term;  // an ordinary sub-term
    bool is_splice() const { return splice.has_value(); }
  };

  Kind kind;
  std::string name;             // Var, Const
  std::vector<Binder> binders;  // Lam
  std::shared_ptr<const MetaTerm> body;
  Arg head;                     // App
  std::vector<Arg> args;

  static MetaTerm var(std::string name);
  static MetaTerm constant(std::string name);
  static MetaTerm lam(std::vector<Binder> binders, MetaTerm body);
  static MetaTerm app(Arg head, std::vector<Arg> args);
  static Arg plain(MetaTerm t);
  static Arg splice_of(std::string seq);
};

MetaTerm parse_meta(std::string_view source);
// Embeds an ordinary term.
MetaTerm meta_from_term(const Term& t);
std::string print_meta(const MetaTerm& m);

// The single index variable of m, if it has any sequence binder. Throws
// InvalidArgument when two different index variables appear.
std::optional<std::string> index_variable(const MetaTerm& m);

// Concrete term for a given n. Sequence x becomes x1 ... xn; an empty head
// splice becomes the identity.
Term expand(const MetaTerm& m, unsigned n);

// Meta-terms of the singly-indexed families that the ellipsis notation can express.
struct BuiltinMeta {
  std::string family;
  std::string source;
};
const std::vector<BuiltinMeta>& builtin_meta_terms();

// Indexed families, built syntactically; the oracle for every arity-generic term.
struct FamilyInstance {
  std::string family;
  unsigned n = 0;
  std::optional<unsigned> k;
};

const std::vector<std::string>& family_names();
bool family_requires_k(std::string_view family);
Term family(const FamilyInstance& inst);

}  // namespace varlam
