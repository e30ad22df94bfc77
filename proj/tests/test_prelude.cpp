#include "doctest.h"
#include "oracle.hpp"

#include "varlam/engine.hpp"
#include "varlam/env.hpp"
#include "varlam/error.hpp"
#include "varlam/prelude.hpp"
#include "varlam/syntax.hpp"

using namespace varlam;

namespace {

const Env& standard() {
  static const Env env = Env::standard();
  return env;
}

unsigned eval(const std::string& src) { return unchurch(parse(src, standard()), standard()); }

}  // namespace

TEST_CASE("church numerals match the reference encoding") {
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(oracle::equal(oracle::from_term(church(n)), oracle::church(n)));
    CHECK(unchurch(church(n), standard()) == n);
  }
  CHECK(print(church(0)) == "\\s z. z");
}

TEST_CASE("unchurch rejects other terms") {
  CHECK_THROWS_AS(unchurch(parse("\\x y. y x"), standard()), Error);
  CHECK(unchurch(parse("\\f. f"), standard()) == 1);
  ReductionConfig cfg;
  cfg.fuel = 10;
  try {
    unchurch(parse("(\\x. x x) (\\x. x x)"), standard(), cfg);
    FAIL("expected a reduction error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Reduction);
  }
}

TEST_CASE("arithmetic against native integers") {
  for (unsigned a = 0; a <= 5; ++a) {
    CHECK(eval("Succ #" + std::to_string(a)) == a + 1);
    CHECK(eval("Pred #" + std::to_string(a)) == (a == 0 ? 0 : a - 1));
    for (unsigned b = 0; b <= 5; ++b) {
      std::string args = " #" + std::to_string(a) + " #" + std::to_string(b);
      CHECK(eval("Plus" + args) == a + b);
      CHECK(eval("Monus" + args) == (a > b ? a - b : 0));
    }
  }
}

TEST_CASE("booleans and pairs") {
  auto eq = [](const char* a, const char* b) {
    return beta_eta_equal(parse(a, standard()), parse(b, standard()), standard());
  };
  CHECK(eq("Zero #0", "True") == Verdict::Equal);
  CHECK(eq("Zero #4", "False") == Verdict::Equal);
  CHECK(eq("Pi12 (\\z. z a b)", "a") == Verdict::Equal);
  CHECK(eq("Pi22 (\\z. z a b)", "b") == Verdict::Equal);
}

TEST_CASE("tuples, selectors and projections") {
  CHECK(print(tuple({parse("a"), parse("b")})) == "\\z.z a b");
  CHECK(alpha_eq(selector(2, 3), parse("\\x1 x2 x3. x2")));
  CHECK(alpha_eq(projection(1, 2), parse("\\x. x (\\x1 x2. x1)")));
  CHECK_THROWS_AS(selector(0, 2), Error);
  CHECK_THROWS_AS(selector(3, 2), Error);
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      std::vector<Term> parts;
      for (unsigned i = 1; i <= n; ++i) parts.push_back(Term::var("e" + std::to_string(i)));
      auto r = normalize(Term::app(projection(k, n), tuple(parts)), standard());
      CHECK(print(r.result) == "e" + std::to_string(k));
    }
}

TEST_CASE("environment rules") {
  Env env;
  env.define("I", parse("\\x. x"), "test");
  CHECK_THROWS_AS(env.define("I", parse("\\y. y"), "test"), Error);
  CHECK_THROWS_AS(env.define("Open", parse("\\x. y"), "test"), Error);
  CHECK_THROWS_AS(env.lookup("Missing"), Error);
  env.load_source("Twice := \\f x. f (f x) ;\nApp := \\f. Twice f ;", "inline");
  CHECK(env.contains("App"));
  CHECK_FALSE(contains_const(env.lookup("App").expanded));
  CHECK(env.lookup("App").provenance == "inline");
  CHECK_THROWS_AS(env.load_source("Bad := Nope ;", "inline"), Error);
  CHECK_THROWS_AS(env.load_file("/nonexistent/defs.lam"), Error);
}

TEST_CASE("the standard environment is closed and ordered") {
  const auto& bs = standard().bindings();
  CHECK(bs.size() > 30);
  for (const auto& b : bs) {
    CAPTURE(b.name);
    CHECK(free_vars(b.expanded).empty());
    CHECK_FALSE(contains_const(b.expanded));
  }
  CHECK_FALSE(builtin_prelude_source().empty());
  CHECK_FALSE(builtin_variadic_source().empty());
}

TEST_CASE("split definitions") {
  auto defs = split_definitions("A := \\x. x ;\n-- comment\nB := A A ;");
  REQUIRE(defs.size() == 2);
  CHECK(defs[0].name == "A");
  CHECK(defs[1].name == "B");
}
