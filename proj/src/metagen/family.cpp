#include <algorithm>
#include <functional>
#include <map>

#include "varlam/error.hpp"
#include "varlam/metagen.hpp"
#include "varlam/prelude.hpp"

namespace varlam {

namespace {

std::vector<std::string> names(const std::string& base, unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(base + std::to_string(i));
  return out;
}

std::vector<Term> vars(const std::vector<std::string>& ns) {
  std::vector<Term> out;
  for (const auto& s : ns) out.push_back(Term::var(s));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Term identity() { return Term::lam("x", Term::var("x")); }

Term fam_i(unsigned n) {
  if (n == 0) return identity();
  auto xs = names("x", n);
  auto v = vars(xs);
  return lambdas(xs, apply_args(v[0], std::vector<Term>(v.begin() + 1, v.end())));
}

Term fam_k(unsigned n) { return lambdas(concat({"p"}, names("x", n)), Term::var("p")); }

Term fam_s(unsigned n) {
  auto xs = names("x", n);
  auto v = vars(xs);
  Term p = apply_args(Term::var("p"), v);
  Term q = apply_args(Term::var("q"), v);
  return lambdas(concat({"p", "q"}, xs), Term::app(p, q));
}

Term fam_b(unsigned n) {
  auto xs = names("x", n);
  return lambdas(concat({"p", "q"}, xs),
                 Term::app(Term::var("p"), apply_args(Term::var("q"), vars(xs))));
}

Term fam_c(unsigned n) {
  auto xs = names("x", n);
  return lambdas(concat({"p", "q"}, xs),
                 Term::app(apply_args(Term::var("p"), vars(xs)), Term::var("q")));
}

Term chain(unsigned n) {
  auto v = vars(names("x", n));
  if (v.empty()) return identity();
  return apply_args(v[0], std::vector<Term>(v.begin() + 1, v.end()));
}

Term fam_d(unsigned n) {
  return lambdas(names("x", n), Term::app(chain(n), chain(n)));
}

Term fam_ntup(unsigned n) {
  auto xs = names("x", n);
  return lambdas(concat(xs, {"s"}), apply_args(Term::var("s"), vars(xs)));
}

Term fam_right_app(unsigned n) {
  auto xs = names("x", n);
  Term body = Term::var("z");
  for (unsigned i = n; i-- > 0;) body = Term::app(Term::var(xs[i]), body);
  return lambdas(concat(xs, {"z"}), body);
}

Term fam_r(unsigned n) {
  auto xs = names("x", n);
  auto v = vars(xs);
  std::reverse(v.begin(), v.end());
  return lambdas(concat(xs, {"w"}), apply_args(Term::var("w"), v));
}

// Q_n mentions f free; Map_n binds it.
Term fam_q(unsigned n) {
  auto xs = names("x", n);
  std::vector<Term> fx;
  for (const auto& x : xs) fx.push_back(Term::app(Term::var("f"), Term::var(x)));
  return lambdas(concat(xs, {"z"}), apply_args(Term::var("z"), fx));
}

Term fam_map(unsigned n) {
  return lambdas({"f", "v"}, Term::app(Term::var("v"), fam_q(n)));
}

void check_k(unsigned k, unsigned n) {
  if (k < 1 || k > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(k) + " of " + std::to_string(n));
}

// λx1 ... xn. (f_j (x1 x1 ... xn) ... (xn x1 ... xn))
Term curry_part(unsigned j, unsigned n) {
  auto xs = names("x", n);
  auto xv = vars(xs);
  std::vector<Term> args;
  for (const auto& x : xv) args.push_back(apply_args(x, xv));
  return lambdas(xs, apply_args(Term::var("f" + std::to_string(j)), args));
}

Term fam_phi(unsigned k, unsigned n) {
  check_k(k, n);
  std::vector<Term> rest;
  for (unsigned j = 1; j <= n; ++j) rest.push_back(curry_part(j, n));
  return lambdas(names("f", n), apply_args(curry_part(k, n), rest));
}

// λx1 ... xn f1 ... fn. (f_j (x1 x⃗ f⃗) ... (xn x⃗ f⃗))
Term turing_part(unsigned j, unsigned n) {
  auto xs = names("x", n);
  auto fs = names("f", n);
  auto all = vars(concat(xs, fs));
  std::vector<Term> args;
  for (const auto& x : xs) args.push_back(apply_args(Term::var(x), all));
  return lambdas(concat(xs, fs), apply_args(Term::var("f" + std::to_string(j)), args));
}

Term fam_psi(unsigned k, unsigned n) {
  check_k(k, n);
  std::vector<Term> rest;
  for (unsigned j = 1; j <= n; ++j) rest.push_back(turing_part(j, n));
  return apply_args(turing_part(k, n), rest);
}

Term fam_m(unsigned k, unsigned n) {
  check_k(k, n);
  auto phis = names("phi", n);
  auto xs = names("x", n);
  auto xv = vars(xs);
  std::vector<Term> args;
  for (const auto& p : phis) args.push_back(apply_args(Term::var(p), xv));
  return lambdas(concat(phis, xs), apply_args(Term::var("x" + std::to_string(k)), args));
}

struct Builder {
  bool needs_k;
  std::function<Term(unsigned k, unsigned n)> build;
};

const std::map<std::string, Builder, std::less<>>& registry() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"I", {false, [](unsigned, unsigned n) { return fam_i(n); }}},
      {"K", {false, [](unsigned, unsigned n) { return fam_k(n); }}},
      {"S", {false, [](unsigned, unsigned n) { return fam_s(n); }}},
      {"B", {false, [](unsigned, unsigned n) { return fam_b(n); }}},
      {"C", {false, [](unsigned, unsigned n) { return fam_c(n); }}},
      {"D", {false, [](unsigned, unsigned n) { return fam_d(n); }}},
      {"Sel", {true, [](unsigned k, unsigned n) { return selector(k, n); }}},
      {"Proj", {true, [](unsigned k, unsigned n) { return projection(k, n); }}},
      {"NtupMaker", {false, [](unsigned, unsigned n) { return fam_ntup(n); }}},
      {"RightApplicator", {false, [](unsigned, unsigned n) { return fam_right_app(n); }}},
      {"R", {false, [](unsigned, unsigned n) { return fam_r(n); }}},
      {"Q", {false, [](unsigned, unsigned n) { return fam_q(n); }}},
      {"Map", {false, [](unsigned, unsigned n) { return fam_map(n); }}},
      {"Phi", {true, fam_phi}},
      {"Psi", {true, fam_psi}},
      {"M", {true, fam_m}},
  };
  return table;
}

const Builder& lookup(std::string_view family) {
  auto it = registry().find(family);
  if (it == registry().end())
    throw Error(ErrorCode::UnknownFamily, "unknown family " + std::string(family));
  return it->second;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    return v;
  }();
  return out;
}

bool family_requires_k(std::string_view family) { return lookup(family).needs_k; }

Term family(const FamilyInstance& inst) {
  const Builder& b = lookup(inst.family);
  if (b.needs_k && !inst.k)
    throw Error(ErrorCode::InvalidArgument, "family " + inst.family + " needs an index k");
  if (!b.needs_k && inst.k)
    throw Error(ErrorCode::InvalidArgument, "family " + inst.family + " takes no index k");
  return b.build(inst.k.value_or(0), inst.n);
}

}  // namespace varlam
