#include "doctest.h"

#include "varlam/engine.hpp"
#include "varlam/env.hpp"
#include "varlam/error.hpp"
#include "varlam/metagen.hpp"
#include "varlam/prelude.hpp"
#include "varlam/syntax.hpp"
#include "varlam/variadic.hpp"

using namespace varlam;

namespace {

const Env& standard() {
  static const Env env = Env::standard();
  return env;
}

Verdict eq(const Term& a, const Term& b) { return beta_eta_equal(a, b, standard()); }
Term c(const char* name) { return Term::constant(name); }

void require_all_pass(const Report& r) {
  for (const auto& cr : r.cases) {
    CAPTURE(cr.name);
    CAPTURE(cr.detail);
    CHECK(cr.outcome == Outcome::Pass);
  }
  CHECK_FALSE(r.cases.empty());
}

}  // namespace

TEST_CASE("every library entry is defined in the standard environment") {
  for (const auto& e : library()) {
    CAPTURE(e.name);
    CHECK(standard().contains(e.name));
    if (e.oracle == OracleKind::Family) CHECK(family_requires_k(e.family) == e.takes_k);
  }
  CHECK_THROWS_AS(library_entry("Nope"), Error);
}

TEST_CASE("every entry passes its checks for n <= 3") {
  for (const auto& e : library()) {
    if (e.mode == CheckMode::Observational) continue;
    CAPTURE(e.name);
    require_all_pass(check_entry(standard(), e.name, 3));
  }
}

TEST_CASE("boundary members of the variadic basis") {
  const char* basis[] = {"VarI", "VarK", "VarS", "VarB", "VarC"};
  for (const char* v : basis) {
    CAPTURE(v);
    CHECK(eq(Term::app(c(v), church(0)), parse("\\x. x")) == Verdict::Equal);
  }
  CHECK(eq(Term::app(c("VarK"), church(1)), c("K")) == Verdict::Equal);
  CHECK(eq(Term::app(c("VarS"), church(1)), c("S")) == Verdict::Equal);
  CHECK(eq(Term::app(c("VarB"), church(1)), c("B")) == Verdict::Equal);
  CHECK(eq(Term::app(c("VarC"), church(1)), c("C")) == Verdict::Equal);
}

TEST_CASE("alternate forms agree") {
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(eq(Term::app(c("VarBalt"), church(n)), Term::app(c("VarB"), church(n))) == Verdict::Equal);
    CHECK(eq(Term::app(c("VarCalt"), church(n)), Term::app(c("VarC"), church(n))) == Verdict::Equal);
  }
}

TEST_CASE("tuple laws") { require_all_pass(check_laws(standard())); }

TEST_CASE("iota builds the tuple of smaller numerals") {
  for (unsigned n = 0; n <= 4; ++n) {
    std::vector<Term> nums;
    for (unsigned i = 0; i < n; ++i) nums.push_back(church(i));
    CHECK(eq(Term::app(c("Iota"), church(n)), tuple(nums)) == Verdict::Equal);
  }
}

TEST_CASE("fixed points") {
  require_all_pass(probe_fixedpoints(standard(), 3));
  CHECK(eq(apply_args(c("VarM"), {church(1), church(1)}), parse("S I", standard())) ==
        Verdict::Equal);
}

TEST_CASE("one-point basis") {
  require_all_pass(check_makex(standard(), {c("K"), c("S")}));
  require_all_pass(check_makex(standard(), {c("I"), c("K"), c("S")}));
  CHECK_THROWS_AS(check_makex(standard(), {c("K")}), Error);
}

TEST_CASE("report rendering") {
  Report r;
  r.add({"s", "a", Outcome::Pass, "ok", 3});
  r.add({"s", "b", Outcome::Inconclusive, {}, 0});
  std::string text = r.render();
  CHECK(text.find("PASS         s/a: ok [3 steps]\n") != std::string::npos);
  CHECK(text.find("INCONCLUSIVE s/b\n") != std::string::npos);
  CHECK(text.find("suite s: 1/2 passed\n") != std::string::npos);
  CHECK(text.find("FAIL: 1 passed, 0 failed, 1 inconclusive\n") != std::string::npos);
  CHECK_FALSE(r.passed());
}

TEST_CASE("suites are deterministic") {
  SuiteOptions o;
  o.random_terms = 20;
  CHECK(run_suite(standard(), "kernel", o).render() == run_suite(standard(), "kernel", o).render());
  CHECK_THROWS_AS(run_suite(standard(), "nope", o), Error);
}
