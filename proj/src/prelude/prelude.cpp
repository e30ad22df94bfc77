#include "varlam/prelude.hpp"

#include <string>

#include "varlam/error.hpp"
#include "varlam/syntax.hpp"

namespace varlam {

Term church(unsigned n) {
  Term body = Term::var("z");
  for (unsigned i = 0; i < n; ++i) body = Term::app(Term::var("s"), std::move(body));
  return lambdas({"s", "z"}, std::move(body));
}

unsigned unchurch(const Term& t, const Env& env, const ReductionConfig& cfg) {
  auto taken = free_vars(t);
  const std::string s = fresh_name("s", taken);
  taken.insert(s);
  const std::string z = fresh_name("z", taken);

  ReductionConfig beta_only = cfg;
  beta_only.eta = false;
  auto out = normalize(apply_args(t, {Term::var(s), Term::var(z)}), env, beta_only);
  if (out.status != ReductionStatus::NormalForm)
    throw Error(ErrorCode::Reduction,
                std::string("numeral did not normalize: ") + status_name(out.status));

  unsigned n = 0;
  const Term* cur = &out.result;
  while (cur->is_app() && cur->fun().is_var() && cur->fun().name() == s) {
    ++n;
    cur = &cur->arg();
  }
  if (!cur->is_var() || cur->name() != z)
    throw Error(ErrorCode::NotANumeral, "not a numeral: " + print(out.result));
  return n;
}

Term tuple(const std::vector<Term>& components) {
  auto taken = std::set<std::string>{};
  for (const auto& c : components) {
    auto fv = free_vars(c);
    taken.insert(fv.begin(), fv.end());
  }
  const std::string z = fresh_name("z", taken);
  return Term::lam(z, apply_args(Term::var(z), components));
}

Term selector(unsigned k, unsigned n) {
  if (k < 1 || k > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "selector index " + std::to_string(k) + " of " + std::to_string(n));
  std::vector<std::string> xs;
  for (unsigned i = 1; i <= n; ++i) xs.push_back("x" + std::to_string(i));
  return lambdas(xs, Term::var(xs[k - 1]));
}

Term projection(unsigned k, unsigned n) {
  Term sel = selector(k, n);
  return Term::lam("x", Term::app(Term::var("x"), std::move(sel)));
}

}  // namespace varlam
