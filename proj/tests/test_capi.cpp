#include <cstring>
#include <string>

#include "doctest.h"

#include "varlam/varlam.h"

namespace {

std::string printed(const vl_term* t, int sugar = 0) {
  char* s = nullptr;
  REQUIRE(vl_term_print(t, sugar, &s) == VL_OK);
  std::string out = s;
  vl_string_free(s);
  return out;
}

struct Fixture {
  vl_env* env = nullptr;
  vl_config cfg{};
  Fixture() {
    REQUIRE(vl_env_create(1, &env) == VL_OK);
    vl_config_default(&cfg);
  }
  ~Fixture() { vl_env_destroy(env); }
  vl_term* parse(const char* src) {
    vl_term* t = nullptr;
    REQUIRE(vl_parse(env, src, &t) == VL_OK);
    return t;
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "c api: parse, normalize, print") {
  CHECK(std::strlen(vl_version()) > 0);
  CHECK(cfg.fuel == 1000000);
  vl_term* t = parse("Succ #2");
  vl_term* nf = nullptr;
  vl_reduction_status st;
  uint64_t steps = 0;
  REQUIRE(vl_normalize(env, t, &cfg, &nf, &st, &steps) == VL_OK);
  CHECK(st == VL_NORMAL_FORM);
  CHECK(steps > 0);
  CHECK(printed(nf, 1) == "#3");
  unsigned n = 0;
  CHECK(vl_unchurch(env, t, &cfg, &n) == VL_OK);
  CHECK(n == 3);
  vl_term_destroy(nf);
  vl_term_destroy(t);
}

TEST_CASE_FIXTURE(Fixture, "c api: errors map to status codes") {
  vl_term* t = nullptr;
  CHECK(vl_parse(env, "(", &t) == VL_ERR_PARSE);
  CHECK(t == nullptr);
  CHECK(std::string(vl_last_error()).find("parse error") != std::string::npos);
  CHECK(vl_parse(env, "Nope", &t) == VL_ERR_UNBOUND_NAME);
  CHECK(vl_parse(nullptr, "x", nullptr) == VL_ERR_INVALID_ARGUMENT);
  CHECK(vl_env_define(env, "I", "\\x. x") == VL_ERR_DUPLICATE_DEFINITION);
  CHECK(vl_env_define(env, "Open", "\\x. y") == VL_ERR_OPEN_DEFINITION);
  CHECK(vl_env_define(env, "lower", "\\x. x") == VL_ERR_INVALID_ARGUMENT);
  CHECK(vl_env_load_file(env, "/nonexistent.lam") == VL_ERR_IO);
  CHECK(vl_family("Nope", 0, 1, &t) == VL_ERR_UNKNOWN_FAMILY);
  CHECK(vl_family("Sel", 3, 2, &t) == VL_ERR_INDEX_OUT_OF_RANGE);
  CHECK(vl_bracket_extended("\\x[1..n] s. s x[1..n]", &t) == VL_ERR_MIXED_SEQUENCE_USE);
  CHECK(std::string(vl_status_name(VL_ERR_PARSE)) == "parse error");
  vl_term* k = parse("K");
  unsigned n;
  CHECK(vl_unchurch(env, k, &cfg, &n) == VL_ERR_NOT_A_NUMERAL);
  vl_term_destroy(k);
  CHECK(vl_parse(env, "x", &t) == VL_OK);
  CHECK(std::string(vl_last_error()).empty());
  vl_term_destroy(t);
}

TEST_CASE_FIXTURE(Fixture, "c api: equality and limits") {
  vl_term* a = parse("S K K");
  vl_term* b = parse("I");
  vl_verdict v;
  REQUIRE(vl_equal(env, a, b, &cfg, &v) == VL_OK);
  CHECK(v == VL_EQUAL);
  int same = 1;
  REQUIRE(vl_term_alpha_eq(a, b, &same) == VL_OK);
  CHECK(same == 0);

  vl_term* omega = parse("(\\x. x x) (\\x. x x)");
  vl_config small = cfg;
  small.fuel = 100;
  REQUIRE(vl_equal(env, omega, b, &small, &v) == VL_OK);
  CHECK(v == VL_UNKNOWN);
  vl_term* nf = nullptr;
  vl_reduction_status st;
  REQUIRE(vl_normalize(env, omega, &small, &nf, &st, nullptr) == VL_OK);
  CHECK(st == VL_FUEL_EXHAUSTED);
  for (vl_term* t : {a, b, omega, nf}) vl_term_destroy(t);
}

TEST_CASE_FIXTURE(Fixture, "c api: deep non-terminating reduction does not crash") {
  vl_term* y = parse("Ycurry");
  vl_term* nf = nullptr;
  vl_reduction_status st;
  vl_config c = cfg;
  c.max_term_size = 200000;
  REQUIRE(vl_normalize(env, y, &c, &nf, &st, nullptr) == VL_OK);
  CHECK(st != VL_NORMAL_FORM);
  vl_term_destroy(nf);
  vl_term_destroy(y);
}

TEST_CASE_FIXTURE(Fixture, "c api: bracket, families, expansion") {
  vl_term* succ = parse("Succ");
  vl_term* out = nullptr;
  REQUIRE(vl_bracket_turner(env, succ, &out) == VL_OK);
  CHECK(printed(out) == "S B");
  vl_term_destroy(out);
  REQUIRE(vl_bracket_turner(nullptr, succ, &out) == VL_OK);
  CHECK(printed(out) == "Succ");
  vl_term_destroy(out);
  vl_term_destroy(succ);

  REQUIRE(vl_bracket_extended("\\x[1..n]. x[1..n] (x[1..n])", &out) == VL_OK);
  CHECK(printed(out) == "\\n.VarS n (VarI n) (VarI n)");
  vl_term_destroy(out);
  REQUIRE(vl_expand_meta("\\x[1..n] s. s x[1..n]", 2, &out) == VL_OK);
  CHECK(printed(out) == "\\x1 x2 s. s x1 x2");
  vl_term_destroy(out);
  REQUIRE(vl_family("Sel", 2, 3, &out) == VL_OK);
  CHECK(printed(out) == "\\x1 x2 x3. x2");
  vl_term_destroy(out);
  char* names = nullptr;
  REQUIRE(vl_family_names(&names) == VL_OK);
  CHECK(std::string(names).find("NtupMaker") != std::string::npos);
  vl_string_free(names);
  REQUIRE(vl_church(2, &out) == VL_OK);
  CHECK(printed(out) == "\\s z. s (s z)");
  vl_term_destroy(out);
}

TEST_CASE_FIXTURE(Fixture, "c api: definitions, apply, trace, check") {
  REQUIRE(vl_env_define(env, "Twice", "\\f x. f (f x)") == VL_OK);
  CHECK(vl_env_contains(env, "Twice"));
  REQUIRE(vl_env_load_source(env, "Thrice := \\f x. f (f (f x)) ;", "inline") == VL_OK);
  vl_term* f = parse("Thrice");
  vl_term* x = parse("g");
  vl_term* fx = nullptr;
  REQUIRE(vl_apply(f, x, &fx) == VL_OK);
  char* text = nullptr;
  REQUIRE(vl_trace(env, fx, &cfg, 0, &text) == VL_OK);
  CHECK(std::string(text).find("\\x.g (g (g x))\n") != std::string::npos);
  vl_string_free(text);
  for (vl_term* t : {f, x, fx}) vl_term_destroy(t);

  char* report = nullptr;
  int passed = 0;
  REQUIRE(vl_check(env, "kernel", 2, &cfg, &report, &passed) == VL_OK);
  CHECK(passed == 1);
  CHECK(std::string(report).find("PASS: ") != std::string::npos);
  vl_string_free(report);
  CHECK(vl_check(env, "nope", 2, &cfg, &report, &passed) == VL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api: empty environment") {
  vl_env* env = nullptr;
  REQUIRE(vl_env_create(0, &env) == VL_OK);
  CHECK_FALSE(vl_env_contains(env, "S"));
  vl_term* t = nullptr;
  CHECK(vl_parse(env, "S", &t) == VL_ERR_UNBOUND_NAME);
  vl_env_destroy(env);
}
