#include "doctest.h"
#include "oracle.hpp"

#include "varlam/env.hpp"
#include "varlam/error.hpp"
#include "varlam/syntax.hpp"
#include "varlam/term.hpp"

using namespace varlam;

TEST_CASE("parse and print round trip canonical forms") {
  for (const char* src : {"\\x.x", "\\s z. s (s z)", "f (g x) (\\y.y)", "a b c", "a (b c)",
                          "\\x1 x2 s. s x1 x2", "(\\x.x) y", "\\f.f (\\x.x) (\\y.y) z"}) {
    CAPTURE(src);
    CHECK(print(parse(src)) == src);
  }
}

TEST_CASE("parse accepts equivalent spellings") {
  CHECK(print(parse("λx.x")) == "\\x.x");
  CHECK(print(parse("\\x y.x")) == "\\x y. x");
  CHECK(print(parse("((a b) c)")) == "a b c");
  CHECK(print(parse("\\x.\\y.x y")) == "\\x y. x y");
  CHECK(print(parse("#2")) == "\\s z. s (s z)");
  CHECK(print(parse("#2"), true) == "#2");
  CHECK(print(parse("\\f x. f x"), true) == "#1");
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"(", "\\.x", "\\x.", "a )", "#", "x :="}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad), ParseError);
  }
  try {
    parse("a )");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("uppercase names need an environment binding") {
  CHECK(parse("K").is_const());
  Env env;
  CHECK_THROWS_WITH_AS(parse("K", env), doctest::Contains("K"), Error);
  env.define("K", parse("\\x y. x"), "test");
  CHECK(parse("K a", env).fun().name() == "K");
}

TEST_CASE("free variables and occurrence") {
  Term t = parse("\\x. x y (\\y. y z)");
  CHECK(free_vars(t) == std::set<std::string>{"y", "z"});
  CHECK(occurs_free(t, "z"));
  CHECK_FALSE(occurs_free(t, "x"));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(parse("\\x. x"), parse("\\y. y")));
  CHECK(alpha_eq(parse("\\x y. x y"), parse("\\a b. a b")));
  CHECK_FALSE(alpha_eq(parse("\\x y. x"), parse("\\x y. y")));
  CHECK_FALSE(alpha_eq(parse("\\x. y"), parse("\\x. z")));
  CHECK_FALSE(alpha_eq(parse("\\x. y"), parse("\\y. y")));
  CHECK(alpha_eq(Term::constant("K"), Term::constant("K")));
  CHECK_FALSE(alpha_eq(Term::constant("K"), Term::constant("S")));
}

TEST_CASE("capture-avoiding substitution") {
  Term t = parse("\\y. x y");
  Term r = substitute(t, "x", parse("y"));
  CHECK(alpha_eq(r, parse("\\w. y w")));
  CHECK(alpha_eq(substitute(parse("\\x. x"), "x", parse("a")), parse("\\x. x")));
  CHECK(alpha_eq(substitute(parse("x (\\x. x) x"), "x", parse("a")), parse("a (\\x. x) a")));
}

TEST_CASE("sizes") {
  CHECK(size(parse("x")) == 1);
  CHECK(size(parse("\\x. x x")) == 4);
  CHECK_THROWS_AS(size(Term::constant("K")), Error);
  CHECK(leaf_size(parse("S B")) == 3);
  CHECK(fresh_name("x", {"x", "x'"}) == "x''");
}

TEST_CASE("property: print then parse is the identity up to alpha") {
  oracle::Generator gen(7);
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(6);
    Term back = parse(print(t));
    CAPTURE(print(t));
    CHECK(alpha_eq(t, back));
    CHECK(print(back) == print(t));
  }
}

TEST_CASE("property: alpha equivalence agrees with de Bruijn equality") {
  oracle::Generator gen(11);
  for (int i = 0; i < 500; ++i) {
    Term a = gen.term(4);
    Term b = gen.term(4);
    CHECK(alpha_eq(a, b) == oracle::equal(oracle::from_term(a), oracle::from_term(b)));
    CHECK(alpha_eq(a, a));
  }
}

TEST_CASE("property: substitution agrees with the de Bruijn oracle") {
  oracle::Generator gen(13);
  for (int i = 0; i < 500; ++i) {
    Term body = gen.term(5);
    Term arg = gen.term(3);
    // (\x. body) arg, contracted both ways
    Term named = substitute(body, "x", arg);
    auto db = oracle::beta(oracle::from_term(Term::lam("x", body))->a, oracle::from_term(arg));
    CAPTURE(print(body));
    CAPTURE(print(arg));
    CHECK(oracle::equal(oracle::from_term(named), db));
  }
}
