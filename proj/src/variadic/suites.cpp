#include <functional>
#include <random>

#include "varlam/bracket.hpp"
#include "varlam/error.hpp"
#include "varlam/metagen.hpp"
#include "varlam/prelude.hpp"
#include "varlam/syntax.hpp"
#include "varlam/variadic.hpp"

namespace varlam {

namespace {

CaseResult verdict_case(const std::string& suite, const std::string& name, bool ok,
                        std::string detail = {}) {
  return {suite, name, ok ? Outcome::Pass : Outcome::Fail, std::move(detail), 0};
}

// Numeral sugar, except that the identity prints as itself rather than #1.
std::string show(const Term& t) {
  bool identity = t.is_lam() && t.body().is_var() && t.body().name() == t.name();
  return print(t, !identity);
}

CaseResult equal_case(const std::string& suite, const std::string& name, const Term& lhs,
                      const Term& rhs, const Env& env, const ReductionConfig& cfg) {
  auto cmp = compare(lhs, rhs, env, cfg);
  CaseResult c{suite, name, Outcome::Pass, show(cmp.left.result),
               cmp.left.steps + cmp.right.steps};
  if (cmp.verdict == Verdict::NotEqual) {
    c.outcome = Outcome::Fail;
    c.detail = "got " + show(cmp.left.result) + ", expected " + show(cmp.right.result);
  } else if (cmp.verdict == Verdict::Unknown) {
    c.outcome = Outcome::Inconclusive;
    c.detail = "no normal form within limits";
  }
  return c;
}

// Runs `body`, turning a library error into a failed case.
template <typename F>
void guarded(Report& r, const std::string& suite, const std::string& name, F body) {
  try {
    body();
  } catch (const Error& e) {
    r.add(verdict_case(suite, name, false,
                       std::string(error_code_name(e.code())) + ": " + e.what()));
  }
}

Report kernel_suite(const Env& env, const SuiteOptions& o) {
  Report r;
  const std::string s = "kernel";
  const auto& cfg = o.cfg;

  for (const char* src : {"\\x.x", "\\s z. s (s z)", "\\x1 x2 s. s x1 x2", "f (g x) (\\y.y)"}) {
    guarded(r, s, std::string("round trip ") + src, [&] {
      std::string printed = print(parse(src));
      r.add(verdict_case(s, std::string("round trip ") + src, printed == src, printed));
    });
  }
  for (unsigned n = 0; n <= 10; ++n) {
    guarded(r, s, "unchurch #" + std::to_string(n), [&] {
      unsigned back = unchurch(church(n), env, cfg);
      r.add(verdict_case(s, "unchurch #" + std::to_string(n), back == n, std::to_string(back)));
    });
  }
  struct Golden {
    const char* lhs;
    const char* rhs;
  };
  const Golden goldens[] = {
      {"Succ #2", "#3"},         {"Plus #2 #3", "#5"},      {"Pred #3", "#2"},
      {"Pred #0", "#0"},         {"Monus #5 #2", "#3"},     {"Monus #2 #5", "#0"},
      {"Zero #0", "True"},       {"Zero #2", "False"},      {"Pi12 (\\z. z a b)", "a"},
      {"Pi22 (\\z. z a b)", "b"}, {"S K K", "I"},            {"B f g x", "f (g x)"},
      {"C f x y", "f y x"},
  };
  for (const auto& g : goldens)
    guarded(r, s, std::string(g.lhs) + " = " + g.rhs, [&] {
      r.add(equal_case(s, std::string(g.lhs) + " = " + g.rhs, parse(g.lhs, env),
                       parse(g.rhs, env), env, cfg));
    });

  guarded(r, s, "Ycurry is Phi_1^1", [&] {
    bool ok = alpha_eq(expand_consts(Term::constant("Ycurry"), env), family({"Phi", 1, 1}));
    r.add(verdict_case(s, "Ycurry is Phi_1^1", ok));
  });
  guarded(r, s, "Yturing is Psi_1^1", [&] {
    bool ok = alpha_eq(expand_consts(Term::constant("Yturing"), env), family({"Psi", 1, 1}));
    r.add(verdict_case(s, "Yturing is Psi_1^1", ok));
  });

  for (unsigned n = 1; n <= o.max_n; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      std::string tag = " k=" + std::to_string(k) + " n=" + std::to_string(n);
      r.add(verdict_case(s, "selector agrees with Sel" + tag,
                         alpha_eq(selector(k, n), family({"Sel", n, k}))));
      r.add(verdict_case(s, "projection agrees with Proj" + tag,
                         alpha_eq(projection(k, n), family({"Proj", n, k}))));
    }
  for (const auto& m : builtin_meta_terms())
    for (unsigned n = 0; n <= o.max_n; ++n) {
      std::string name = "expand " + m.family + " n=" + std::to_string(n);
      guarded(r, s, name, [&] {
        Term e = expand(parse_meta(m.source), n);
        Term f = family({m.family, n, std::nullopt});
        r.add(verdict_case(s, name, alpha_eq(e, f), print(e)));
      });
    }
  return r;
}

Report bracket_suite(const Env& env, const SuiteOptions& o) {
  Report r;
  const std::string s = "bracket";
  struct Golden {
    const char* source;
    const char* expected;
  };
  const Golden turner_goldens[] = {
      {"\\a b c. b (a b c)", "S B"},
      {"\\x. x x", "S I I"},
      {"\\x. y", "K y"},
  };
  for (const auto& g : turner_goldens) {
    std::string name = std::string("turner ") + g.source;
    guarded(r, s, name, [&] {
      std::string got = print(turner(parse(g.source)));
      r.add(verdict_case(s, name, got == g.expected, got));
    });
  }

  auto terms = random_closed_terms(o.random_terms, 5, o.seed);
  std::size_t sound = 0, pure = 0;
  std::string first_bad;
  for (const auto& t : terms) {
    Term b = turner(t);
    bool lam_free = true;
    std::vector<Term> stack{b};
    while (!stack.empty()) {
      Term cur = stack.back();
      stack.pop_back();
      if (cur.is_lam()) lam_free = false;
      if (cur.is_app()) {
        stack.push_back(cur.fun());
        stack.push_back(cur.arg());
      }
    }
    if (lam_free) ++pure;
    if (beta_eta_equal(b, t, env, o.cfg) == Verdict::Equal)
      ++sound;
    else if (first_bad.empty())
      first_bad = print(t);
  }
  const std::string counts = std::to_string(terms.size()) + " terms";
  r.add(verdict_case(s, "turner soundness on random closed terms",
                     terms.size() == o.random_terms && sound == terms.size(),
                     std::to_string(sound) + "/" + counts +
                         (first_bad.empty() ? "" : ", first failure " + first_bad)));
  r.add(verdict_case(s, "turner output is abstraction-free", pure == terms.size(),
                     std::to_string(pure) + "/" + counts));

  const Golden extended_goldens[] = {
      {"\\x[1..n]. x[1..n] (x[1..n])", "\\n. VarS n (VarI n) (VarI n)"},
      {"\\x[1..n]. x[1..n]", "\\n. VarI n"},
      {"\\x[1..n]. y", "\\n. VarK n y"},
  };
  for (const auto& g : extended_goldens) {
    std::string name = std::string("extended ") + g.source;
    guarded(r, s, name, [&] {
      Term got = extended_closed(parse_meta(g.source));
      r.add(verdict_case(s, name, alpha_eq(got, parse(g.expected, env)), print(got)));
    });
  }

  for (const auto& m : builtin_meta_terms()) {
    MetaTerm meta = parse_meta(m.source);
    Term compiled = Term::var("?");
    try {
      compiled = extended_closed(meta);
    } catch (const Error& e) {
      bool expected = e.code() == ErrorCode::MixedSequenceUse && m.family == "NtupMaker";
      r.add(verdict_case(s, "extended " + m.family + " rejected", expected,
                         std::string(error_code_name(e.code()))));
      continue;
    }
    for (unsigned n = 0; n <= o.max_n; ++n)
      r.add(equal_case(s, "extended " + m.family + " n=" + std::to_string(n),
                       Term::app(compiled, church(n)), expand(meta, n), env, o.cfg));
  }

  for (const auto& obs : size_observations(env)) {
    std::string detail = std::to_string(obs.compiled_size) + " vs " +
                         std::to_string(obs.source_size);
    if (!obs.holds()) detail += " (larger, flagged)";
    // only the Succ case is required to hold
    bool ok = obs.label != "Succ" || obs.holds();
    r.add(verdict_case(s, "size " + obs.label, ok, detail));
  }
  return r;
}

Report variadic_suite(const Env& env, const SuiteOptions& o) {
  Report r;
  for (const auto& e : library()) {
    if (e.mode == CheckMode::Observational) continue;
    guarded(r, "variadic", e.name, [&] { r.append(check_entry(env, e.name, o.max_n, o.cfg)); });
  }
  return r;
}

Report fixpoint_suite(const Env& env, const SuiteOptions& o) {
  Report r;
  guarded(r, "fixpoint", "probes", [&] { r.append(probe_fixedpoints(env, o.max_n, o.cfg)); });
  guarded(r, "boehm", "relation", [&] { r.append(check_boehm(env, o.max_n, o.caps, o.cfg)); });
  return r;
}

}  // namespace

std::vector<SizeObservation> size_observations(const Env& env) {
  std::vector<SizeObservation> out;
  auto observe = [&](const std::string& label, const Term& t) {
    out.push_back({label, leaf_size(t), leaf_size(turner(t))});
  };
  observe("\\x. x x", parse("\\x. x x"));
  for (const auto& b : env.bindings())
    if (b.provenance.find("variadic") == std::string::npos) observe(b.name, b.expanded);
  return out;
}

std::vector<Term> random_closed_terms(unsigned count, unsigned max_depth, std::uint64_t seed,
                                      std::size_t fuel) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> scope;
  unsigned fresh = 0;

  std::function<Term(unsigned)> gen = [&](unsigned depth) -> Term {
    std::uniform_int_distribution<int> pick(0, 9);
    int roll = pick(rng);
    if (depth == 0 || (roll < 3 && !scope.empty())) {
      std::uniform_int_distribution<std::size_t> v(0, scope.size() - 1);
      return Term::var(scope[v(rng)]);
    }
    if (roll < 6 || scope.empty()) {
      std::string name = "v" + std::to_string(fresh++);
      scope.push_back(name);
      Term body = gen(depth - 1);
      scope.pop_back();
      return Term::lam(name, body);
    }
    Term f = gen(depth - 1);
    return Term::app(f, gen(depth - 1));
  };

  Env empty;
  ReductionConfig cfg;
  cfg.fuel = fuel;
  cfg.max_term_size = 100'000;
  std::vector<Term> out;
  for (unsigned attempt = 0; out.size() < count && attempt < count * 100; ++attempt) {
    fresh = 0;
    std::string root = "v" + std::to_string(fresh++);
    scope = {root};
    Term t = Term::lam(root, gen(max_depth - 1));
    if (normalize(t, empty, cfg).status == ReductionStatus::NormalForm) out.push_back(t);
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernel", "bracket", "variadic", "fixpoint", "all"};
  return names;
}

Report run_suite(const Env& env, const std::string& suite, const SuiteOptions& opts) {
  if (suite == "kernel") return kernel_suite(env, opts);
  if (suite == "bracket") return bracket_suite(env, opts);
  if (suite == "variadic") return variadic_suite(env, opts);
  if (suite == "fixpoint") return fixpoint_suite(env, opts);
  if (suite == "all") {
    Report r = kernel_suite(env, opts);
    r.append(bracket_suite(env, opts));
    r.append(variadic_suite(env, opts));
    r.append(fixpoint_suite(env, opts));
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite " + suite);
}

}  // namespace varlam
