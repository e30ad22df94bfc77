#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "varlam/term.hpp"

// Reference implementation used only by the tests: de Bruijn terms with
// shifting and substitution written from the textbook definitions, normalized
// by a plain leftmost-outermost stepper. Shares no code with the engine.
namespace oracle {

struct Db;
using DbPtr = std::shared_ptr<const Db>;

struct Db {
  enum Kind { Var, Lam, App } kind;
  int index = 0;
  std::string free_name;  // for free variables
  DbPtr a, b;
};

inline DbPtr var(int i) { return std::make_shared<Db>(Db{Db::Var, i, {}, nullptr, nullptr}); }
inline DbPtr fvar(std::string n) {
  return std::make_shared<Db>(Db{Db::Var, -1, std::move(n), nullptr, nullptr});
}
inline DbPtr lam(DbPtr body) { return std::make_shared<Db>(Db{Db::Lam, 0, {}, body, nullptr}); }
inline DbPtr app(DbPtr f, DbPtr x) { return std::make_shared<Db>(Db{Db::App, 0, {}, f, x}); }

inline DbPtr from_term(const varlam::Term& t, std::vector<std::string>& ctx) {
  if (t.is_var()) {
    for (int i = static_cast<int>(ctx.size()) - 1; i >= 0; --i)
      if (ctx[i] == t.name()) return var(static_cast<int>(ctx.size()) - 1 - i);
    return fvar(t.name());
  }
  if (t.is_lam()) {
    ctx.push_back(t.name());
    DbPtr body = from_term(t.body(), ctx);
    ctx.pop_back();
    return lam(body);
  }
  if (t.is_app()) return app(from_term(t.fun(), ctx), from_term(t.arg(), ctx));
  return fvar("#const:" + t.name());
}

inline DbPtr from_term(const varlam::Term& t) {
  std::vector<std::string> ctx;
  return from_term(t, ctx);
}

inline DbPtr shift(const DbPtr& t, int d, int cutoff) {
  switch (t->kind) {
    case Db::Var:
      if (t->index < 0 || t->index < cutoff) return t;
      return var(t->index + d);
    case Db::Lam: return lam(shift(t->a, d, cutoff + 1));
    case Db::App: return app(shift(t->a, d, cutoff), shift(t->b, d, cutoff));
  }
  return t;
}

inline DbPtr subst(const DbPtr& t, int j, const DbPtr& s) {
  switch (t->kind) {
    case Db::Var:
      if (t->index == j) return s;
      return t;
    case Db::Lam: return lam(subst(t->a, j + 1, shift(s, 1, 0)));
    case Db::App: return app(subst(t->a, j, s), subst(t->b, j, s));
  }
  return t;
}

inline DbPtr beta(const DbPtr& body, const DbPtr& arg) {
  return shift(subst(body, 0, shift(arg, 1, 0)), -1, 0);
}

// One leftmost-outermost step, or nullopt at normal form.
inline std::optional<DbPtr> step(const DbPtr& t) {
  if (t->kind == Db::App) {
    if (t->a->kind == Db::Lam) return beta(t->a->a, t->b);
    if (auto f = step(t->a)) return app(*f, t->b);
    if (auto x = step(t->b)) return app(t->a, *x);
    return std::nullopt;
  }
  if (t->kind == Db::Lam) {
    if (auto b = step(t->a)) return lam(*b);
  }
  return std::nullopt;
}

inline bool occurs(const DbPtr& t, int j) {
  switch (t->kind) {
    case Db::Var: return t->index == j;
    case Db::Lam: return occurs(t->a, j + 1);
    case Db::App: return occurs(t->a, j) || occurs(t->b, j);
  }
  return false;
}

inline DbPtr eta(const DbPtr& t) {
  switch (t->kind) {
    case Db::Var: return t;
    case Db::App: return app(eta(t->a), eta(t->b));
    case Db::Lam: {
      DbPtr body = eta(t->a);
      if (body->kind == Db::App && body->b->kind == Db::Var && body->b->index == 0 &&
          !occurs(body->a, 0))
        return shift(body->a, -1, 0);
      return lam(body);
    }
  }
  return t;
}

inline std::optional<DbPtr> normalize(DbPtr t, std::size_t fuel, bool with_eta = true) {
  for (std::size_t i = 0; i <= fuel; ++i) {
    auto next = step(t);
    if (!next) return with_eta ? eta(t) : t;
    t = *next;
  }
  return std::nullopt;
}

inline bool equal(const DbPtr& x, const DbPtr& y) {
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Db::Var: return x->index == y->index && x->free_name == y->free_name;
    case Db::Lam: return equal(x->a, y->a);
    case Db::App: return equal(x->a, y->a) && equal(x->b, y->b);
  }
  return false;
}

// Church numeral n written out directly, independent of the library.
inline DbPtr church(unsigned n) {
  DbPtr body = var(0);
  for (unsigned i = 0; i < n; ++i) body = app(var(1), body);
  return lam(lam(body));
}

// Random named term over the given free names, with binders from a small pool
// so that shadowing and capture situations occur.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  varlam::Term term(unsigned depth, std::vector<std::string> scope = {}) {
    std::uniform_int_distribution<int> roll(0, 9);
    int r = roll(rng_);
    if (depth == 0 || r < 2) return leaf(scope);
    if (r < 5) {
      std::string b = binders_[pick(binders_.size())];
      scope.push_back(b);
      return varlam::Term::lam(b, term(depth - 1, scope));
    }
    return varlam::Term::app(term(depth - 1, scope), term(depth - 1, scope));
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  varlam::Term leaf(const std::vector<std::string>& scope) {
    if (!scope.empty() && pick(4) != 0) return varlam::Term::var(scope[pick(scope.size())]);
    return varlam::Term::var(frees_[pick(frees_.size())]);
  }

  std::mt19937_64 rng_;
  std::vector<std::string> binders_{"x", "y", "z", "x'"};
  std::vector<std::string> frees_{"a", "b", "x", "y"};
};

}  // namespace oracle
