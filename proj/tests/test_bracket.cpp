#include "doctest.h"
#include "oracle.hpp"

#include "varlam/bracket.hpp"
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

bool abstraction_free(const Term& t) {
  if (t.is_lam()) return false;
  if (t.is_app()) return abstraction_free(t.fun()) && abstraction_free(t.arg());
  return true;
}

}  // namespace

TEST_CASE("turner goldens") {
  CHECK(print(turner(expand_consts(parse("Succ", standard()), standard()))) == "S B");
  CHECK(print(turner(parse("\\x. x x"))) == "S I I");
  CHECK(print(turner(parse("\\x. x"))) == "I");
  CHECK(print(turner(parse("\\x y. x"))) == "K");
  CHECK(print(turner(parse("\\x. f x"))) == "f");
  CHECK(print(turner(parse("\\x. f (g x)"))) == "B f g");
  CHECK(print(turner(parse("\\x. f x y"))) == "C f y");
  CHECK(print(turner(parse("a b"))) == "a b");
}

TEST_CASE("property: turner is sound on random closed terms") {
  // Closed random terms built from the reference generator by closing over free names.
  oracle::Generator gen(41);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(5);
    for (const auto& v : free_vars(t)) t = Term::lam(v, t);
    ReductionConfig cfg;
    cfg.fuel = 5000;
    auto src = normalize(t, standard(), cfg);
    if (src.status != ReductionStatus::NormalForm) continue;
    Term b = turner(t);
    CAPTURE(print(t));
    CHECK(abstraction_free(b));
    auto ref = oracle::normalize(oracle::from_term(expand_consts(b, standard())), 200'000);
    REQUIRE(ref);
    CHECK(oracle::equal(*ref, oracle::from_term(src.result)));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("seeded random closed terms are deterministic and normalizing") {
  auto a = random_closed_terms(50, 5, 99);
  auto b = random_closed_terms(50, 5, 99);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(print(a[i]) == print(b[i]));
    CHECK(free_vars(a[i]).empty());
  }
}

TEST_CASE("extended algorithm goldens") {
  CHECK(alpha_eq(extended_closed(parse_meta("\\x[1..n]. x[1..n] (x[1..n])")),
                 parse("\\n. VarS n (VarI n) (VarI n)", standard())));
  CHECK(alpha_eq(extended_closed(parse_meta("\\x[1..n]. y")),
                 parse("\\n. VarK n y", standard())));
  Term open = extended(parse_meta("\\x[1..n]. x[1..n]"));
  CHECK(free_vars(open) == std::set<std::string>{"n"});
}

TEST_CASE("extended algorithm is sound on the built-in meta-terms") {
  for (const auto& m : builtin_meta_terms()) {
    MetaTerm meta = parse_meta(m.source);
    if (m.family == "NtupMaker") {
      try {
        extended_closed(meta);
        FAIL("NtupMaker should be rejected");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MixedSequenceUse);
      }
      continue;
    }
    Term compiled = extended_closed(meta);
    for (unsigned n = 0; n <= 3; ++n) {
      CAPTURE(m.family);
      CAPTURE(n);
      CHECK(beta_eta_equal(Term::app(compiled, church(n)), expand(meta, n), standard()) ==
            Verdict::Equal);
    }
  }
}

TEST_CASE("extended algorithm handles plain abstractions inside") {
  MetaTerm m = parse_meta("\\f x[1..n]. f (\\y. y) x[1..n]");
  Term compiled = extended_closed(m);
  for (unsigned n = 0; n <= 3; ++n)
    CHECK(beta_eta_equal(Term::app(compiled, church(n)), expand(m, n), standard()) ==
          Verdict::Equal);
}

TEST_CASE("size observations") {
  auto obs = size_observations(standard());
  bool saw_succ = false;
  for (const auto& o : obs)
    if (o.label == "Succ") {
      saw_succ = true;
      CHECK(o.source_size == 10);
      CHECK(o.compiled_size == 3);
      CHECK(o.holds());
    }
  CHECK(saw_succ);
}
