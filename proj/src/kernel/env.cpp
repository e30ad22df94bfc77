#include "varlam/env.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "varlam/error.hpp"
#include "varlam/syntax.hpp"

namespace varlam {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_constants(const Term& t, const Env& env) {
  switch (t.kind()) {
    case TermKind::Var:
      return;
    case TermKind::Const:
      if (!env.contains(t.name())) throw Error(ErrorCode::UnboundName, "unbound name " + t.name());
      return;
    case TermKind::Lam:
      check_constants(t.body(), env);
      return;
    case TermKind::App:
      check_constants(t.fun(), env);
      check_constants(t.arg(), env);
      return;
  }
}

}  // namespace

Env Env::standard() {
  Env env;
  if (const char* dir = std::getenv("VARLAM_PRELUDE"); dir && *dir) {
    std::filesystem::path base(dir);
    env.load_file((base / "prelude.lam").string());
    env.load_file((base / "variadic.lam").string());
  } else {
    env.load_source(builtin_prelude_source(), "<prelude.lam>");
    env.load_source(builtin_variadic_source(), "<variadic.lam>");
  }
  return env;
}

void Env::define(const std::string& name, const Term& definition, const std::string& provenance) {
  if (contains(name))
    throw Error(ErrorCode::DuplicateDefinition,
                name + " is already defined (" + lookup(name).provenance + ")");
  check_constants(definition, *this);
  auto open = free_vars(definition);
  if (!open.empty())
    throw Error(ErrorCode::OpenDefinition,
                "definition of " + name + " has free variable " + *open.begin());
  Term expanded = expand_consts(definition, *this);
  index_.emplace(name, bindings_.size());
  bindings_.push_back({name, definition, std::move(expanded), provenance});
}

void Env::load_source(std::string_view source, const std::string& provenance) {
  for (const auto& def : split_definitions(source)) {
    auto parsed = [&] {
      try {
        return parse(def.source, this);
      } catch (const ParseError& e) {
        throw ParseError(def.offset, provenance + ": in definition of " + def.name + ": " + e.what());
      }
    }();
    define(def.name, parsed, provenance);
  }
}

void Env::load_file(const std::string& path) { load_source(read_file(path), path); }

bool Env::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

const Env::Binding* Env::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &bindings_[it->second];
}

const Env::Binding& Env::lookup(std::string_view name) const {
  if (const Binding* b = find(name)) return *b;
  throw Error(ErrorCode::UnboundName, "unbound name " + std::string(name));
}

Term expand_consts(const Term& t, const Env& env) {
  switch (t.kind()) {
    case TermKind::Var:
      return t;
    case TermKind::Const:
      return env.lookup(t.name()).expanded;
    case TermKind::Lam: {
      Term body = expand_consts(t.body(), env);
      if (body.same_node(t.body())) return t;
      return Term::lam(t.name(), std::move(body));
    }
    case TermKind::App: {
      Term f = expand_consts(t.fun(), env);
      Term a = expand_consts(t.arg(), env);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
  }
  return t;
}

}  // namespace varlam
