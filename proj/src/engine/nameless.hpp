#pragma once

// Internal de Bruijn representation used by the reducer. Nodes cache their
// size and the bound on loose indices so substitution can skip closed subtrees.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>

#include "varlam/env.hpp"
#include "varlam/term.hpp"

namespace varlam::detail {

enum class DKind : std::uint8_t { Bound, Free, Lam, App };

struct DNode;
using DRef = std::shared_ptr<const DNode>;

struct DNode {
  DKind kind;
  std::uint32_t index;  // Bound
  std::uint32_t loose;  // every loose index is < loose
  std::size_t size;
  std::string name;     // Free variable name, or binder hint for Lam
  DRef left;            // Lam body, App function
  DRef right;           // App argument
};

DRef mk_bound(std::uint32_t i);
DRef mk_free(std::string name);
DRef mk_lam(std::string hint, DRef body);
DRef mk_app(DRef f, DRef a);

// Adds d to every loose index >= cutoff.
DRef shift(const DRef& t, int d, std::uint32_t cutoff);
// Contracts (λ.body) arg.
DRef beta(const DRef& body, const DRef& arg);
bool has_loose(const DRef& t, std::uint32_t j);
bool same(const DRef& a, const DRef& b);  // structural, ignores binder hints
std::string key(const DRef& t);          // canonical text, equal keys iff same()

class Converter {
 public:
  explicit Converter(const Env& env) : env_(env) {}
  DRef to_nameless(const Term& t);

 private:
  DRef convert(const Term& t, std::vector<const std::string*>& scope);
  const Env& env_;
  std::unordered_map<std::string, DRef> consts_;
};

Term to_named(const DRef& t);

}  // namespace varlam::detail
