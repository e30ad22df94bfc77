#include "varlam/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "nameless.hpp"

namespace varlam {

using detail::DKind;
using detail::DRef;

const char* status_name(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::NormalForm: return "NormalForm";
    case ReductionStatus::FuelExhausted: return "FuelExhausted";
    case ReductionStatus::SizeExceeded: return "SizeExceeded";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "EQUAL";
    case Verdict::NotEqual: return "NOT-EQUAL";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

// Normal order as head reduction followed by normalization of the arguments
// left to right; everything left of the current position is already normal,
// so each contraction is the leftmost-outermost redex of the whole term.
class Normalizer {
 public:
  Normalizer(std::size_t fuel, std::size_t max_size) : fuel_(fuel), max_size_(max_size) {}

  DRef run(const DRef& t) {
    if (t->size > max_size_) {
      stop(ReductionStatus::SizeExceeded);
      return t;
    }
    return norm(t, 0);
  }

  ReductionStatus status() const { return status_; }
  std::size_t steps() const { return steps_; }

 private:
  void stop(ReductionStatus s) {
    stopped_ = true;
    status_ = s;
  }

  static DRef rebuild(DRef head, const std::vector<DRef>& pending) {
    // pending holds the remaining arguments, next argument last
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) head = detail::mk_app(head, *it);
    return head;
  }

  DRef norm(const DRef& t, std::size_t ctx) {
    if (stopped_) return t;
    switch (t->kind) {
      case DKind::Bound:
      case DKind::Free:
        return t;
      case DKind::Lam: {
        DRef body = norm(t->left, ctx + 1);
        if (body == t->left) return t;
        return detail::mk_lam(t->name, std::move(body));
      }
      case DKind::App:
        break;
    }

    DRef head = t;
    std::vector<DRef> pending;  // arguments, next one at the back
    std::size_t local = t->size;
    auto unwind = [&] {
      while (head->kind == DKind::App) {
        pending.push_back(head->right);
        head = head->left;
      }
    };
    unwind();

    while (head->kind == DKind::Lam && !pending.empty()) {
      if (steps_ >= fuel_) {
        stop(ReductionStatus::FuelExhausted);
        return rebuild(head, pending);
      }
      DRef arg = std::move(pending.back());
      pending.pop_back();
      local -= head->size + arg->size + 1;
      head = detail::beta(head->left, arg);
      local += head->size;
      ++steps_;
      unwind();
      if (ctx + local > max_size_) {
        stop(ReductionStatus::SizeExceeded);
        return rebuild(head, pending);
      }
    }

    if (head->kind == DKind::Lam) return norm(head, ctx);

    std::vector<DRef> args(pending.rbegin(), pending.rend());
    bool changed = head != t;
    for (auto& a : args) {
      std::size_t before = a->size;
      DRef n = norm(a, ctx + local - before);
      if (n != a) {
        changed = true;
        local = local - before + n->size;
        a = std::move(n);
      }
      if (stopped_) break;
    }
    if (!changed) return t;
    DRef out = head;
    for (auto& a : args) out = detail::mk_app(out, a);
    return out;
  }

  std::size_t fuel_;
  std::size_t max_size_;
  std::size_t steps_ = 0;
  bool stopped_ = false;
  ReductionStatus status_ = ReductionStatus::NormalForm;
};

DRef eta_reduce(const DRef& t) {
  switch (t->kind) {
    case DKind::Bound:
    case DKind::Free:
      return t;
    case DKind::App: {
      DRef f = eta_reduce(t->left);
      DRef a = eta_reduce(t->right);
      if (f == t->left && a == t->right) return t;
      return detail::mk_app(std::move(f), std::move(a));
    }
    case DKind::Lam: {
      DRef body = eta_reduce(t->left);
      if (body->kind == DKind::App && body->right->kind == DKind::Bound && body->right->index == 0 &&
          !detail::has_loose(body->left, 0))
        return detail::shift(body->left, -1, 0);
      if (body == t->left) return t;
      return detail::mk_lam(t->name, std::move(body));
    }
  }
  return t;
}

struct NamelessOutcome {
  ReductionStatus status;
  DRef result;
  std::size_t steps;
};

NamelessOutcome normalize_nameless(const DRef& t, const ReductionConfig& cfg) {
  Normalizer n(cfg.fuel, cfg.max_term_size);
  DRef r = n.run(t);
  if (n.status() == ReductionStatus::NormalForm && cfg.eta) r = eta_reduce(r);
  return {n.status(), r, n.steps()};
}

// One leftmost-outermost step, or nullptr when t is β-normal.
DRef step(const DRef& t) {
  switch (t->kind) {
    case DKind::Bound:
    case DKind::Free:
      return nullptr;
    case DKind::Lam: {
      DRef b = step(t->left);
      return b ? detail::mk_lam(t->name, std::move(b)) : nullptr;
    }
    case DKind::App:
      if (t->left->kind == DKind::Lam) return detail::beta(t->left->left, t->right);
      if (DRef f = step(t->left)) return detail::mk_app(std::move(f), t->right);
      if (DRef a = step(t->right)) return detail::mk_app(t->left, std::move(a));
      return nullptr;
  }
  return nullptr;
}

void all_steps(const DRef& t, std::vector<DRef>& out) {
  switch (t->kind) {
    case DKind::Bound:
    case DKind::Free:
      return;
    case DKind::Lam: {
      std::vector<DRef> inner;
      all_steps(t->left, inner);
      for (auto& b : inner) out.push_back(detail::mk_lam(t->name, std::move(b)));
      return;
    }
    case DKind::App: {
      if (t->left->kind == DKind::Lam) out.push_back(detail::beta(t->left->left, t->right));
      std::vector<DRef> inner;
      all_steps(t->left, inner);
      for (auto& f : inner) out.push_back(detail::mk_app(std::move(f), t->right));
      inner.clear();
      all_steps(t->right, inner);
      for (auto& a : inner) out.push_back(detail::mk_app(t->left, std::move(a)));
      return;
    }
  }
}

bool has_redex_nameless(const DRef& t, bool eta) {
  switch (t->kind) {
    case DKind::Bound:
    case DKind::Free:
      return false;
    case DKind::Lam:
      if (eta && t->left->kind == DKind::App && t->left->right->kind == DKind::Bound &&
          t->left->right->index == 0 && !detail::has_loose(t->left->left, 0))
        return true;
      return has_redex_nameless(t->left, eta);
    case DKind::App:
      return t->left->kind == DKind::Lam || has_redex_nameless(t->left, eta) ||
             has_redex_nameless(t->right, eta);
  }
  return false;
}

}  // namespace

ReductionOutcome normalize(const Term& t, const Env& env, const ReductionConfig& cfg) {
  detail::Converter conv(env);
  auto out = normalize_nameless(conv.to_nameless(t), cfg);
  return {out.status, detail::to_named(out.result), out.steps};
}

std::vector<Term> trace(const Term& t, const Env& env, const ReductionConfig& cfg) {
  detail::Converter conv(env);
  DRef cur = conv.to_nameless(t);
  std::vector<Term> seq{expand_consts(t, env)};
  for (std::size_t i = 0; i < cfg.fuel; ++i) {
    DRef next = step(cur);
    if (!next || next->size > cfg.max_term_size) break;
    cur = std::move(next);
    seq.push_back(detail::to_named(cur));
  }
  return seq;
}

Comparison compare(const Term& a, const Term& b, const Env& env, const ReductionConfig& cfg) {
  detail::Converter conv(env);
  auto na = normalize_nameless(conv.to_nameless(a), cfg);
  auto nb = normalize_nameless(conv.to_nameless(b), cfg);
  Verdict v = Verdict::Unknown;
  if (na.status == ReductionStatus::NormalForm && nb.status == ReductionStatus::NormalForm)
    v = detail::same(na.result, nb.result) ? Verdict::Equal : Verdict::NotEqual;
  return {v,
          {na.status, detail::to_named(na.result), na.steps},
          {nb.status, detail::to_named(nb.result), nb.steps}};
}

SearchResult reduces_to(const Term& a, const Term& target, const Env& env, std::size_t node_cap,
                        std::size_t depth_cap, std::size_t max_term_size) {
  detail::Converter conv(env);
  DRef start = conv.to_nameless(a);
  const std::string goal = detail::key(conv.to_nameless(target));

  SearchResult result;
  std::unordered_set<std::string> seen;
  std::vector<DRef> frontier;
  auto visit = [&](const DRef& t) {
    std::string k = detail::key(t);
    if (!seen.insert(k).second) return false;
    ++result.visited;
    if (k == goal) result.reached = true;
    frontier.push_back(t);
    return true;
  };
  visit(start);
  if (result.reached) return result;

  for (std::size_t depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
    std::vector<DRef> current;
    current.swap(frontier);
    result.depth = depth;
    for (const auto& t : current) {
      std::vector<DRef> next;
      all_steps(t, next);
      for (const auto& n : next) {
        if (n->size > max_term_size) {
          result.inconclusive = true;
          continue;
        }
        visit(n);
        if (result.reached) return result;
        if (result.visited >= node_cap) {
          result.inconclusive = true;
          return result;
        }
      }
    }
  }
  if (!frontier.empty()) result.inconclusive = true;
  return result;
}

std::vector<Term> one_step_reducts(const Term& t, const Env& env) {
  detail::Converter conv(env);
  std::vector<DRef> next;
  all_steps(conv.to_nameless(t), next);
  std::vector<Term> out;
  out.reserve(next.size());
  for (const auto& n : next) out.push_back(detail::to_named(n));
  return out;
}

bool has_redex(const Term& t, bool eta) {
  Env empty;
  detail::Converter conv(empty);
  return has_redex_nameless(conv.to_nameless(t), eta);
}

}  // namespace varlam
