#include <algorithm>
#include <sstream>

#include "varlam/error.hpp"
#include "varlam/metagen.hpp"
#include "varlam/prelude.hpp"
#include "varlam/syntax.hpp"
#include "varlam/variadic.hpp"

namespace varlam {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

void Report::append(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::size_t Report::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [o](const CaseResult& c) { return c.outcome == o; }));
}

std::string Report::render() const {
  std::ostringstream out;
  std::vector<std::string> suites;
  for (const auto& c : cases) {
    out << outcome_name(c.outcome);
    for (std::size_t pad = std::string(outcome_name(c.outcome)).size(); pad < 13; ++pad) out << ' ';
    out << c.suite << '/' << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.steps) out << " [" << c.steps << " steps]";
    out << '\n';
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) suites.push_back(c.suite);
  }
  for (const auto& s : suites) {
    std::size_t total = 0, pass = 0;
    for (const auto& c : cases) {
      if (c.suite != s) continue;
      ++total;
      if (c.outcome == Outcome::Pass) ++pass;
    }
    out << "suite " << s << ": " << pass << "/" << total << " passed\n";
  }
  out << (passed() ? "PASS" : "FAIL") << ": " << count(Outcome::Pass) << " passed, "
      << count(Outcome::Fail) << " failed, " << count(Outcome::Inconclusive)
      << " inconclusive\n";
  return out.str();
}

namespace {

Term cst(const std::string& name) { return Term::constant(name); }

std::string shorten(const Term& t) {
  bool identity = t.is_lam() && t.body().is_var() && t.body().name() == t.name();
  std::string s = print(t, !identity);
  if (s.size() > 100) s = s.substr(0, 97) + "...";
  return s;
}

std::string indices(std::optional<unsigned> k, unsigned n) {
  std::string s;
  if (k) s += "k=" + std::to_string(*k) + " ";
  return s + "n=" + std::to_string(n);
}

CaseResult equality(const std::string& suite, const std::string& name, const Term& lhs,
                    const Term& rhs, const Env& env, const ReductionConfig& cfg) {
  CaseResult r{suite, name, Outcome::Pass, {}, 0};
  try {
    auto cmp = compare(lhs, rhs, env, cfg);
    r.steps = cmp.left.steps + cmp.right.steps;
    switch (cmp.verdict) {
      case Verdict::Equal:
        r.detail = shorten(cmp.left.result);
        break;
      case Verdict::NotEqual:
        r.outcome = Outcome::Fail;
        r.detail = "got " + shorten(cmp.left.result) + ", expected " + shorten(cmp.right.result);
        break;
      case Verdict::Unknown:
        r.outcome = Outcome::Inconclusive;
        r.detail = std::string("no normal form within limits (") +
                   status_name(cmp.left.status) + ", " + status_name(cmp.right.status) + ")";
        break;
    }
  } catch (const Error& e) {
    r.outcome = Outcome::Fail;
    r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return r;
}

std::vector<Term> constant_generators(unsigned n) {
  std::vector<std::string> ys;
  for (unsigned i = 1; i <= n; ++i) ys.push_back("y" + std::to_string(i));
  std::vector<Term> fs;
  for (unsigned j = 1; j <= n; ++j) fs.push_back(lambdas(ys, church(j)));
  return fs;
}

struct Law {
  std::string entry;
  std::string lhs;
  std::string rhs;
};

const std::vector<Law>& laws() {
  static const std::vector<Law> table = {
      {"Iota", "Iota #3", "\\z. z #0 #1 #2"},
      {"Iota", "Iota #0", "\\x. x"},
      {"VarRev", "VarRev #3 e1 e2 e3", "\\z. z e3 e2 e1"},
      {"VarRev", "(\\z. z e1 e2 e3 e4) (VarRev #4)", "\\z. z e4 e3 e2 e1"},
      {"VarMap", "VarMap #2 Succ (\\z. z #1 #2)", "\\z. z #2 #3"},
      {"VarExtend", "VarExtend #2 (\\z. z a b) c", "\\z. z a b c"},
      {"Catenate", "Catenate #3 (\\z. z e1 e2 e3) #2 (\\z. z f1 f2)", "\\z. z e1 e2 e3 f1 f2"},
      {"Apply", "Apply f (\\z. z a b)", "f a b"},
      {"VarRightApp", "VarRightApp #2 f g z", "f (g z)"},
  };
  return table;
}

Report laws_for(const Env& env, const std::string& entry, const ReductionConfig& cfg) {
  Report r;
  for (const auto& law : laws()) {
    if (!entry.empty() && law.entry != entry) continue;
    r.add(equality("laws", law.lhs + " = " + law.rhs, parse(law.lhs, env), parse(law.rhs, env),
                   env, cfg));
  }
  return r;
}

Report filter_prefix(const Report& in, const std::string& prefix) {
  Report out;
  for (const auto& c : in.cases)
    if (c.name.rfind(prefix + " ", 0) == 0) out.add(c);
  return out;
}

}  // namespace

Report check_laws(const Env& env, const ReductionConfig& cfg) { return laws_for(env, "", cfg); }

Report check_entry(const Env& env, const std::string& name, unsigned max_n,
                   const ReductionConfig& cfg) {
  const VariadicEntry& e = library_entry(name);
  Report r;
  switch (e.oracle) {
    case OracleKind::Family:
      for (unsigned n = 0; n <= max_n; ++n) {
        std::vector<std::optional<unsigned>> ks;
        if (e.takes_k)
          for (unsigned k = 1; k <= n; ++k) ks.push_back(k);
        else
          ks.push_back(std::nullopt);
        for (auto k : ks) {
          std::vector<Term> args;
          if (k) args.push_back(church(*k));
          args.push_back(church(n));
          Term oracle = family({e.family, n, k});
          r.add(equality("variadic", name + " " + indices(k, n), apply_args(cst(name), args),
                         oracle, env, cfg));
        }
      }
      if (name == "VarBalt" || name == "VarCalt") {
        std::string base = name.substr(0, 4);
        for (unsigned n = 0; n <= max_n; ++n)
          r.add(equality("variadic", name + " n=" + std::to_string(n) + " agrees with " + base,
                         Term::app(cst(name), church(n)), Term::app(cst(base), church(n)), env,
                         cfg));
      }
      break;
    case OracleKind::Iota:
      for (unsigned n = 0; n <= max_n; ++n) {
        std::vector<Term> nums;
        for (unsigned i = 0; i < n; ++i) nums.push_back(church(i));
        r.add(equality("variadic", name + " n=" + std::to_string(n),
                       Term::app(cst(name), church(n)), tuple(nums), env, cfg));
      }
      break;
    case OracleKind::Laws:
      break;
    case OracleKind::OnePoint:
      r.append(check_makex(env, {cst("K"), cst("S")}, cfg));
      r.append(check_makex(env, {cst("I"), cst("K"), cst("S")}, cfg));
      break;
    case OracleKind::FixedPoint:
      r.append(filter_prefix(probe_fixedpoints(env, std::max(max_n, 2u), cfg), name));
      break;
  }
  r.append(laws_for(env, name, cfg));
  return r;
}

Report probe_fixedpoints(const Env& env, unsigned max_n, const ReductionConfig& cfg) {
  Report r;
  const std::string suite = "fixpoint";
  for (const char* comb : {"VarPhi", "VarPsi"}) {
    for (unsigned n = 1; n <= max_n; ++n) {
      auto fs = constant_generators(n);
      for (unsigned k = 1; k <= n; ++k) {
        Term lhs = apply_args(apply_args(cst(comb), {church(k), church(n)}), fs);
        r.add(equality(suite, std::string(comb) + " constants " + indices(k, n), lhs, church(k),
                       env, cfg));
      }
    }
  }
  for (unsigned n = 1; n <= max_n; ++n) {
    auto fs = constant_generators(n);
    Term packed = apply_args(cst("Ystar"), {church(n), tuple(fs)});
    Term curried = apply_args(apply_args(cst("YstarCurried"), {church(n)}), fs);
    for (unsigned k = 1; k <= n; ++k) {
      Term proj = apply_args(cst("VarProj"), {church(k), church(n)});
      r.add(equality(suite, "Ystar constants " + indices(k, n), Term::app(proj, packed),
                     church(k), env, cfg));
      r.add(equality(suite, "YstarCurried constants " + indices(k, n), Term::app(proj, curried),
                     church(k), env, cfg));
    }
  }

  const Term even = parse("\\e o n. Zero n True (o (Pred n))", env);
  const Term odd = parse("\\e o n. Zero n False (e (Pred n))", env);
  for (unsigned k = 1; k <= 2; ++k) {
    const std::string which = k == 1 ? "even" : "odd";
    Term proj = apply_args(cst("VarProj"), {church(k), church(2)});
    std::vector<std::pair<std::string, Term>> fns = {
        {"VarPhi", apply_args(cst("VarPhi"), {church(k), church(2), even, odd})},
        {"VarPsi", apply_args(cst("VarPsi"), {church(k), church(2), even, odd})},
        {"Ystar", Term::app(proj, apply_args(cst("Ystar"), {church(2), tuple({even, odd})}))},
        {"YstarCurried", Term::app(proj, apply_args(cst("YstarCurried"), {church(2), even, odd}))},
    };
    for (const auto& [label, fn] : fns) {
      for (unsigned m = 0; m <= 6; ++m) {
        bool expect = (m % 2 == 0) == (k == 1);
        r.add(equality(suite, label + " " + which + " m=" + std::to_string(m),
                       Term::app(fn, church(m)), cst(expect ? "True" : "False"), env, cfg));
      }
    }
  }
  return r;
}

Report check_boehm(const Env& env, unsigned max_n, const SearchCaps& caps,
                   const ReductionConfig& cfg) {
  Report r;
  const std::string suite = "boehm";
  r.add(equality(suite, "VarM #1 #1 = S I", apply_args(cst("VarM"), {church(1), church(1)}),
                 parse("S I", env), env, cfg));
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 1; k <= n; ++k)
      r.add(equality(suite, "VarM " + indices(k, n) + " against family",
                     apply_args(cst("VarM"), {church(k), church(n)}), family({"M", n, k}), env,
                     cfg));

  for (unsigned n = 1; n <= std::min(max_n, 2u); ++n) {
    std::vector<Term> ms;
    for (unsigned j = 1; j <= n; ++j) ms.push_back(family({"M", n, j}));
    for (unsigned k = 1; k <= n; ++k) {
      Term start = apply_args(family({"Phi", n, k}), ms);
      Term target = family({"Psi", n, k});
      auto found = reduces_to(start, target, env, caps.node_cap, caps.depth_cap);
      CaseResult c{suite, "Phi M ->> Psi " + indices(k, n), Outcome::Pass, {}, 0};
      std::ostringstream d;
      d << "visited " << found.visited << ", depth " << found.depth;
      if (found.reached) {
        c.detail = "reached, " + d.str();
      } else if (found.inconclusive) {
        c.outcome = Outcome::Inconclusive;
        c.detail = "cap hit, " + d.str();
      } else {
        c.outcome = Outcome::Fail;
        c.detail = "not reachable, " + d.str();
      }
      r.add(std::move(c));
    }
  }

  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<Term> ms;
    for (unsigned j = 1; j <= n; ++j) ms.push_back(apply_args(cst("VarM"), {church(j), church(n)}));
    auto fs = constant_generators(n);
    for (unsigned k = 1; k <= n; ++k) {
      Term phi_m = apply_args(apply_args(cst("VarPhi"), {church(k), church(n)}), ms);
      Term psi = apply_args(cst("VarPsi"), {church(k), church(n)});
      r.add(equality(suite, "VarPhi (VarM ...) ~ VarPsi on constants " + indices(k, n),
                     apply_args(phi_m, fs), apply_args(psi, fs), env, cfg));
    }
  }
  return r;
}

Report check_makex(const Env& env, const std::vector<Term>& terms, const ReductionConfig& cfg) {
  if (terms.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "the one-point basis needs at least two terms");
  Report r;
  const auto n = static_cast<unsigned>(terms.size());
  Term x = apply_args(Term::app(cst("VarMakeX"), church(n)), terms);
  std::string names;
  for (const auto& t : terms) names += (names.empty() ? "" : ",") + print(t);
  for (unsigned k = 1; k <= n; ++k) {
    Term inner = x;
    for (unsigned i = 0; i < k; ++i) inner = Term::app(inner, x);
    r.add(equality("makex", "[" + names + "] X (X^" + std::to_string(k + 1) + ") = E" +
                                std::to_string(k),
                   Term::app(x, inner), terms[k - 1], env, cfg));
  }
  return r;
}

}  // namespace varlam
