#include "nameless.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace varlam::detail {

DRef mk_bound(std::uint32_t i) {
  return std::make_shared<const DNode>(DNode{DKind::Bound, i, i + 1, 1, {}, nullptr, nullptr});
}

DRef mk_free(std::string name) {
  return std::make_shared<const DNode>(DNode{DKind::Free, 0, 0, 1, std::move(name), nullptr, nullptr});
}

DRef mk_lam(std::string hint, DRef body) {
  std::uint32_t loose = body->loose > 0 ? body->loose - 1 : 0;
  std::size_t sz = body->size + 1;
  return std::make_shared<const DNode>(
      DNode{DKind::Lam, 0, loose, sz, std::move(hint), std::move(body), nullptr});
}

DRef mk_app(DRef f, DRef a) {
  std::uint32_t loose = std::max(f->loose, a->loose);
  std::size_t sz = f->size + a->size + 1;
  return std::make_shared<const DNode>(
      DNode{DKind::App, 0, loose, sz, {}, std::move(f), std::move(a)});
}

DRef shift(const DRef& t, int d, std::uint32_t cutoff) {
  if (d == 0 || t->loose <= cutoff) return t;
  switch (t->kind) {
    case DKind::Bound:
      return mk_bound(static_cast<std::uint32_t>(static_cast<int>(t->index) + d));
    case DKind::Free:
      return t;
    case DKind::Lam:
      return mk_lam(t->name, shift(t->left, d, cutoff + 1));
    case DKind::App:
      return mk_app(shift(t->left, d, cutoff), shift(t->right, d, cutoff));
  }
  return t;
}

namespace {

struct Substitution {
  const DRef& arg;
  std::vector<std::optional<DRef>> shifted;  // arg shifted by depth, built on demand

  const DRef& at_depth(std::uint32_t depth) {
    if (shifted.size() <= depth) shifted.resize(depth + 1);
    if (!shifted[depth]) shifted[depth] = shift(arg, static_cast<int>(depth), 0);
    return *shifted[depth];
  }

  DRef run(const DRef& t, std::uint32_t depth) {
    if (t->loose <= depth) return t;
    switch (t->kind) {
      case DKind::Bound:
        if (t->index == depth) return at_depth(depth);
        return mk_bound(t->index - 1);
      case DKind::Free:
        return t;
      case DKind::Lam:
        return mk_lam(t->name, run(t->left, depth + 1));
      case DKind::App:
        return mk_app(run(t->left, depth), run(t->right, depth));
    }
    return t;
  }
};

}  // namespace

DRef beta(const DRef& body, const DRef& arg) {
  Substitution s{arg, {}};
  return s.run(body, 0);
}

bool has_loose(const DRef& t, std::uint32_t j) {
  if (t->loose <= j) return false;
  switch (t->kind) {
    case DKind::Bound:
      return t->index == j;
    case DKind::Free:
      return false;
    case DKind::Lam:
      return has_loose(t->left, j + 1);
    case DKind::App:
      return has_loose(t->left, j) || has_loose(t->right, j);
  }
  return false;
}

bool same(const DRef& a, const DRef& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->size != b->size || a->loose != b->loose) return false;
  switch (a->kind) {
    case DKind::Bound:
      return a->index == b->index;
    case DKind::Free:
      return a->name == b->name;
    case DKind::Lam:
      return same(a->left, b->left);
    case DKind::App:
      return same(a->left, b->left) && same(a->right, b->right);
  }
  return false;
}

namespace {

void write_key(const DRef& t, std::string& out) {
  switch (t->kind) {
    case DKind::Bound:
      out += std::to_string(t->index);
      out += ' ';
      return;
    case DKind::Free:
      out += '$';
      out += t->name;
      out += ' ';
      return;
    case DKind::Lam:
      out += 'L';
      write_key(t->left, out);
      return;
    case DKind::App:
      out += 'A';
      write_key(t->left, out);
      write_key(t->right, out);
      return;
  }
}

}  // namespace

std::string key(const DRef& t) {
  std::string out;
  out.reserve(t->size * 2);
  write_key(t, out);
  return out;
}

DRef Converter::to_nameless(const Term& t) {
  std::vector<const std::string*> scope;
  return convert(t, scope);
}

DRef Converter::convert(const Term& t, std::vector<const std::string*>& scope) {
  switch (t.kind()) {
    case TermKind::Var:
      for (std::size_t i = scope.size(); i-- > 0;)
        if (*scope[i] == t.name()) return mk_bound(static_cast<std::uint32_t>(scope.size() - 1 - i));
      return mk_free(t.name());
    case TermKind::Const: {
      auto it = consts_.find(t.name());
      if (it != consts_.end()) return it->second;
      std::vector<const std::string*> empty;
      DRef d = convert(env_.lookup(t.name()).expanded, empty);
      consts_.emplace(t.name(), d);
      return d;
    }
    case TermKind::Lam: {
      scope.push_back(&t.name());
      DRef body = convert(t.body(), scope);
      scope.pop_back();
      return mk_lam(t.name(), std::move(body));
    }
    case TermKind::App: {
      DRef f = convert(t.fun(), scope);
      DRef a = convert(t.arg(), scope);
      return mk_app(std::move(f), std::move(a));
    }
  }
  return nullptr;
}

namespace {

void collect_free_names(const DRef& t, std::set<std::string>& out) {
  switch (t->kind) {
    case DKind::Free:
      out.insert(t->name);
      return;
    case DKind::Bound:
      return;
    case DKind::Lam:
      collect_free_names(t->left, out);
      return;
    case DKind::App:
      collect_free_names(t->left, out);
      collect_free_names(t->right, out);
      return;
  }
}

struct Namer {
  const std::set<std::string>& free;
  std::vector<std::string> scope;

  Term run(const DRef& t) {
    switch (t->kind) {
      case DKind::Bound:
        return Term::var(scope[scope.size() - 1 - t->index]);
      case DKind::Free:
        return Term::var(t->name);
      case DKind::Lam: {
        std::string name = t->name.empty() ? "x" : t->name;
        while (free.count(name) || std::find(scope.begin(), scope.end(), name) != scope.end())
          name += '\'';
        scope.push_back(name);
        Term body = run(t->left);
        scope.pop_back();
        return Term::lam(std::move(name), std::move(body));
      }
      case DKind::App: {
        Term f = run(t->left);
        return Term::app(std::move(f), run(t->right));
      }
    }
    return Term::var("?");
  }
};

}  // namespace

Term to_named(const DRef& t) {
  std::set<std::string> free;
  collect_free_names(t, free);
  Namer namer{free, {}};
  return namer.run(t);
}

}  // namespace varlam::detail
