#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varlam/term.hpp"

namespace varlam {

// Ordered table of closed named definitions. A definition may only refer to
// names defined before it, so the table is acyclic by construction.
class Env {
 public:
  struct Binding {
    std::string name;
    Term definition;  // as written, may contain constants
    Term expanded;    // constant-free, closed
    std::string provenance;
  };

  Env() = default;

  // Empty table, or the shipped prelude plus the variadic library. When the
  // VARLAM_PRELUDE environment variable names a directory, prelude.lam and
  // variadic.lam are read from there instead of the built-in copies.
  static Env standard();
  static Env empty() { return Env{}; }

  void define(const std::string& name, const Term& definition, const std::string& provenance);
  // Parses and defines every `Name := term ;` statement in `source`.
  void load_source(std::string_view source, const std::string& provenance);
  void load_file(const std::string& path);

  bool contains(std::string_view name) const;
  const Binding& lookup(std::string_view name) const;  // throws UnboundName
  const Binding* find(std::string_view name) const;
  const std::vector<Binding>& bindings() const { return bindings_; }

 private:
  std::vector<Binding> bindings_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Replaces every constant by its closed definition.
Term expand_consts(const Term& t, const Env& env);

// Built-in text of the shipped definition files.
std::string_view builtin_prelude_source();
std::string_view builtin_variadic_source();

}  // namespace varlam
