// Command-line front end over the C API.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "varlam/varlam.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(vl_status s) {
  switch (s) {
    case VL_ERR_IO: return kExitNoInput;
    case VL_ERR_INVALID_ARGUMENT: return kExitUsage;
    case VL_ERR_INTERNAL: return kExitInternal;
    default: return kExitData;
  }
}

void check(vl_status s) {
  if (s != VL_OK) throw Failure{exit_code_for(s), vl_last_error()};
}

struct TermDeleter {
  void operator()(vl_term* t) const { vl_term_destroy(t); }
};
using TermPtr = std::unique_ptr<vl_term, TermDeleter>;

struct EnvDeleter {
  void operator()(vl_env* e) const { vl_env_destroy(e); }
};
using EnvPtr = std::unique_ptr<vl_env, EnvDeleter>;

std::string take_string(char* s) {
  std::string out(s ? s : "");
  vl_string_free(s);
  return out;
}

std::string render(const vl_term* t, bool sugar) {
  char* s = nullptr;
  check(vl_term_print(t, sugar ? 1 : 0, &s));
  return take_string(s);
}

TermPtr parse(const vl_env* env, const std::string& src) {
  vl_term* t = nullptr;
  check(vl_parse(env, src.c_str(), &t));
  return TermPtr(t);
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitNoInput, "cannot open " + path};
  return read_all(in);
}

struct Options {
  // shared
  std::uint64_t max_steps = 0;
  std::uint64_t max_size = 0;
  bool no_eta = false;
  bool no_prelude = false;
  std::vector<std::string> defs;
  bool sugar = false;
  bool trace = false;
  // per command
  std::vector<std::string> exprs;
  std::string file;
  std::string algo = "turner";
  int n = -1;
  int k = -1;
  std::string family;
  std::string suite = "all";
  unsigned max_n = 3;
  unsigned number = 0;
};

vl_config make_config(const Options& o) {
  vl_config cfg;
  vl_config_default(&cfg);
  if (o.max_steps) cfg.fuel = o.max_steps;
  if (o.max_size) cfg.max_term_size = o.max_size;
  if (o.no_eta) cfg.eta = 0;
  return cfg;
}

EnvPtr make_env(const Options& o) {
  vl_env* e = nullptr;
  check(vl_env_create(o.no_prelude ? 0 : 1, &e));
  EnvPtr env(e);
  for (const auto& path : o.defs) check(vl_env_load_file(env.get(), path.c_str()));
  return env;
}

// The single input term: -e, then FILE, then stdin.
std::string input_source(const Options& o) {
  if (!o.exprs.empty()) {
    if (o.exprs.size() > 1) throw Failure{kExitUsage, "expected a single -e expression"};
    return o.exprs.front();
  }
  if (!o.file.empty()) return read_file(o.file);
  return read_all(std::cin);
}

int cmd_parse(const Options& o) {
  EnvPtr env = make_env(o);
  std::cout << render(parse(env.get(), input_source(o)).get(), o.sugar) << '\n';
  return 0;
}

int cmd_normalize(const Options& o) {
  EnvPtr env = make_env(o);
  TermPtr t = parse(env.get(), input_source(o));
  vl_config cfg = make_config(o);
  if (o.trace) {
    char* text = nullptr;
    check(vl_trace(env.get(), t.get(), &cfg, o.sugar ? 1 : 0, &text));
    std::cout << take_string(text);
  }
  vl_term* out = nullptr;
  vl_reduction_status status = VL_NORMAL_FORM;
  std::uint64_t steps = 0;
  check(vl_normalize(env.get(), t.get(), &cfg, &out, &status, &steps));
  TermPtr result(out);
  if (status == VL_FUEL_EXHAUSTED) {
    std::cerr << "FUEL: no normal form within " << cfg.fuel << " steps\n";
    return 2;
  }
  if (status == VL_SIZE_EXCEEDED) {
    std::cerr << "SIZE: term grew beyond " << cfg.max_term_size << " nodes after " << steps
              << " steps\n";
    return 2;
  }
  if (!o.trace) std::cout << render(result.get(), o.sugar) << '\n';
  return 0;
}

int cmd_eq(const Options& o) {
  std::vector<std::string> sides = o.exprs;
  if (sides.empty()) {
    std::istringstream in(o.file.empty() ? read_all(std::cin) : read_file(o.file));
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) sides.push_back(line);
  }
  if (sides.size() != 2) throw Failure{kExitUsage, "eq needs exactly two terms"};
  EnvPtr env = make_env(o);
  TermPtr a = parse(env.get(), sides[0]);
  TermPtr b = parse(env.get(), sides[1]);
  vl_config cfg = make_config(o);
  vl_verdict v = VL_UNKNOWN;
  check(vl_equal(env.get(), a.get(), b.get(), &cfg, &v));
  switch (v) {
    case VL_EQUAL: std::cout << "EQUAL\n"; return 0;
    case VL_NOT_EQUAL: std::cout << "NOT-EQUAL\n"; return 1;
    case VL_UNKNOWN: std::cout << "UNKNOWN\n"; return 2;
  }
  return 2;
}

int cmd_bracket(const Options& o) {
  EnvPtr env = make_env(o);
  std::string src = input_source(o);
  vl_term* out = nullptr;
  if (o.algo == "turner") {
    if (o.n >= 0) throw Failure{kExitUsage, "--n applies to --algo variadic only"};
    TermPtr t = parse(env.get(), src);
    check(vl_bracket_turner(env.get(), t.get(), &out));
    std::cout << render(TermPtr(out).get(), o.sugar) << '\n';
    return 0;
  }
  check(vl_bracket_extended(src.c_str(), &out));
  TermPtr compiled(out);
  if (o.n < 0) {
    std::cout << render(compiled.get(), o.sugar) << '\n';
    return 0;
  }
  vl_term* num = nullptr;
  check(vl_church(static_cast<unsigned>(o.n), &num));
  TermPtr numeral(num);
  vl_term* applied = nullptr;
  check(vl_apply(compiled.get(), numeral.get(), &applied));
  TermPtr app(applied);
  vl_config cfg = make_config(o);
  vl_reduction_status status = VL_NORMAL_FORM;
  check(vl_normalize(env.get(), app.get(), &cfg, &out, &status, nullptr));
  TermPtr result(out);
  if (status != VL_NORMAL_FORM) {
    std::cerr << (status == VL_FUEL_EXHAUSTED ? "FUEL" : "SIZE") << ": no normal form\n";
    return 2;
  }
  std::cout << render(result.get(), o.sugar) << '\n';
  return 0;
}

int cmd_expand(const Options& o) {
  if (o.n < 0) throw Failure{kExitUsage, "expand needs --n"};
  vl_term* out = nullptr;
  if (!o.family.empty()) {
    check(vl_family(o.family.c_str(), o.k < 0 ? 0u : static_cast<unsigned>(o.k),
                    static_cast<unsigned>(o.n), &out));
  } else {
    if (o.k >= 0) throw Failure{kExitUsage, "--k applies to --family only"};
    std::string src = input_source(o);
    check(vl_expand_meta(src.c_str(), static_cast<unsigned>(o.n), &out));
  }
  std::cout << render(TermPtr(out).get(), o.sugar) << '\n';
  return 0;
}

int cmd_church(const Options& o) {
  vl_term* out = nullptr;
  check(vl_church(o.number, &out));
  std::cout << render(TermPtr(out).get(), o.sugar) << '\n';
  return 0;
}

int cmd_unchurch(const Options& o) {
  EnvPtr env = make_env(o);
  TermPtr t = parse(env.get(), input_source(o));
  vl_config cfg = make_config(o);
  unsigned n = 0;
  check(vl_unchurch(env.get(), t.get(), &cfg, &n));
  std::cout << n << '\n';
  return 0;
}

int cmd_check(const Options& o) {
  EnvPtr env = make_env(o);
  vl_config cfg = make_config(o);
  char* report = nullptr;
  int passed = 0;
  check(vl_check(env.get(), o.suite.c_str(), o.max_n, &cfg, &report, &passed));
  std::cout << take_string(report);
  return passed ? 0 : 1;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r;");
  return s.substr(b, e - b + 1);
}

int cmd_repl(const Options& o) {
  EnvPtr env = make_env(o);
  vl_config cfg = make_config(o);
  for (std::string line; std::getline(std::cin, line);) {
    line = trim(line);
    if (line.empty() || line.rfind("--", 0) == 0) continue;
    if (line == ":quit" || line == ":q") break;
    try {
      if (line.rfind(":def ", 0) == 0) {
        std::string rest = line.substr(5);
        auto pos = rest.find(":=");
        if (pos == std::string::npos) throw Failure{kExitUsage, "usage: :def Name := term"};
        std::string name = trim(rest.substr(0, pos));
        check(vl_env_define(env.get(), name.c_str(), trim(rest.substr(pos + 2)).c_str()));
        std::cout << "defined " << name << '\n';
      } else if (line.rfind(":eq ", 0) == 0) {
        std::string rest = line.substr(4);
        auto pos = rest.find("==");
        if (pos == std::string::npos) throw Failure{kExitUsage, "usage: :eq a == b"};
        TermPtr a = parse(env.get(), rest.substr(0, pos));
        TermPtr b = parse(env.get(), rest.substr(pos + 2));
        vl_verdict v = VL_UNKNOWN;
        check(vl_equal(env.get(), a.get(), b.get(), &cfg, &v));
        std::cout << (v == VL_EQUAL ? "EQUAL" : v == VL_NOT_EQUAL ? "NOT-EQUAL" : "UNKNOWN")
                  << '\n';
      } else if (line[0] == ':') {
        throw Failure{kExitUsage, "unknown command " + line};
      } else {
        TermPtr t = parse(env.get(), line);
        vl_term* out = nullptr;
        vl_reduction_status status = VL_NORMAL_FORM;
        check(vl_normalize(env.get(), t.get(), &cfg, &out, &status, nullptr));
        TermPtr result(out);
        if (status == VL_NORMAL_FORM)
          std::cout << render(result.get(), o.sugar) << '\n';
        else
          std::cout << (status == VL_FUEL_EXHAUSTED ? "FUEL" : "SIZE") << '\n';
      }
    } catch (const Failure& f) {
      std::cout << "error: " << f.message << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the untyped lambda calculus and arity-generic combinators",
               "varlam"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--max-steps", o.max_steps, "beta-step limit (default 1000000)");
  app.add_option("--max-size", o.max_size, "term size limit in nodes (default 1000000)");
  app.add_flag("--no-eta", o.no_eta, "stop at the beta-normal form");
  app.add_flag("--no-prelude", o.no_prelude, "start from an empty environment");
  app.add_option("--defs", o.defs, "load definitions from a .lam file")->check(CLI::ExistingFile);
  app.add_flag("--sugar", o.sugar, "print numerals as #n");

  auto input = [&](CLI::App* sub, bool many) {
    auto* e = sub->add_option("-e,--expr", o.exprs, "term source");
    if (!many) e->expected(1);
    sub->add_option("FILE", o.file, "read the term from a file")->check(CLI::ExistingFile);
  };

  auto* parse_cmd = app.add_subcommand("parse", "print the canonical form of a term");
  input(parse_cmd, false);
  auto* norm = app.add_subcommand("normalize", "normal-order reduction to normal form");
  input(norm, false);
  norm->add_flag("--trace", o.trace, "print every reduction step");
  auto* eq = app.add_subcommand("eq", "decide beta-eta equality of two terms");
  input(eq, true);
  auto* bracket = app.add_subcommand("bracket", "compile abstractions into combinators");
  input(bracket, false);
  bracket->add_option("--algo", o.algo, "turner or variadic")
      ->check(CLI::IsMember({"turner", "variadic"}));
  bracket->add_option("--n", o.n, "apply the variadic result to #n and normalize")
      ->check(CLI::NonNegativeNumber);
  auto* expand = app.add_subcommand("expand", "expand a meta-term or family member");
  input(expand, false);
  expand->add_option("--n", o.n, "sequence length")->check(CLI::NonNegativeNumber);
  expand->add_option("--k", o.k, "second index")->check(CLI::NonNegativeNumber);
  expand->add_option("--family", o.family, "family name");
  auto* church = app.add_subcommand("church", "print the Church numeral for N");
  church->add_option("N", o.number, "natural number")->required();
  auto* unchurch = app.add_subcommand("unchurch", "read a numeral back as a number");
  input(unchurch, false);
  auto* checks = app.add_subcommand("check", "run a verification suite");
  checks->add_option("--suite", o.suite, "kernel, bracket, variadic, fixpoint or all")
      ->check(CLI::IsMember({"kernel", "bracket", "variadic", "fixpoint", "all"}));
  checks->add_option("--max-n", o.max_n, "largest arity checked");
  auto* repl = app.add_subcommand("repl", "read-eval-print loop on stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(o);
    if (*norm) return cmd_normalize(o);
    if (*eq) return cmd_eq(o);
    if (*bracket) return cmd_bracket(o);
    if (*expand) return cmd_expand(o);
    if (*church) return cmd_church(o);
    if (*unchurch) return cmd_unchurch(o);
    if (*checks) return cmd_check(o);
    if (*repl) return cmd_repl(o);
  } catch (const Failure& f) {
    std::cerr << "varlam: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}
