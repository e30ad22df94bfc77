#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varlam/engine.hpp"
#include "varlam/env.hpp"
#include "varlam/term.hpp"

namespace varlam {

enum class CheckMode { Normalizing, Observational };

// How an entry is verified.
enum class OracleKind {
  Family,      // (V c_[k] c_n) against family(oracle, k, n)
  Iota,        // (V c_n) against the tuple of numerals c_0 ... c_{n-1}
  Laws,        // equational laws only
  OnePoint,    // check_makex
  FixedPoint,  // probe_fixedpoints
};

struct VariadicEntry {
  std::string name;    // binding in the standard environment
  OracleKind oracle;
  std::string family;  // for OracleKind::Family
  bool takes_k = false;
  CheckMode mode = CheckMode::Normalizing;
};

// Every arity-generic definition shipped in variadic.lam, in file order.
const std::vector<VariadicEntry>& library();
const VariadicEntry& library_entry(const std::string& name);  // throws UnboundName

enum class Outcome { Pass, Fail, Inconclusive };
const char* outcome_name(Outcome o);

struct CaseResult {
  std::string suite;
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::size_t steps = 0;
};

struct Report {
  std::vector<CaseResult> cases;

  void add(CaseResult c) { cases.push_back(std::move(c)); }
  void append(const Report& other);
  std::size_t count(Outcome o) const;
  bool passed() const { return count(Outcome::Pass) == cases.size(); }
  // One line per case followed by a summary line starting with PASS or FAIL.
  std::string render() const;
};

// Normalizing entries: every n <= max_n (and 1 <= k <= n) against the oracle.
// Observational entries: the fixed-point probes.
Report check_entry(const Env& env, const std::string& name, unsigned max_n,
                   const ReductionConfig& cfg = {});

// Tuple laws: iota, reverse, map, extend, catenate, apply, right applicator.
Report check_laws(const Env& env, const ReductionConfig& cfg = {});

// Constant-generator probes for VarPhi and VarPsi with n <= max_n, the even/odd
// generators on numerals 0 ... 6 under VarPhi, VarPsi, Ystar and YstarCurried.
Report probe_fixedpoints(const Env& env, unsigned max_n, const ReductionConfig& cfg = {});

struct SearchCaps {
  std::size_t node_cap = 100'000;
  std::size_t depth_cap = 200;
};

// VarM against S I and the M family; Φ_k^n M_1^n ... M_n^n ->> Ψ_k^n for
// n <= min(max_n, 2); the variadic forms compared on constant probes.
Report check_boehm(const Env& env, unsigned max_n, const SearchCaps& caps = {},
                   const ReductionConfig& cfg = {});

// X := VarMakeX c_n E_1 ... E_n, then X (X ... X) with k+1 inner copies is E_k.
Report check_makex(const Env& env, const std::vector<Term>& terms,
                   const ReductionConfig& cfg = {});

// Size of Turner's output against the source, constants counted as leaves.
struct SizeObservation {
  std::string label;
  std::size_t source_size;
  std::size_t compiled_size;
  bool holds() const { return compiled_size <= source_size; }
};
std::vector<SizeObservation> size_observations(const Env& env);

// Closed terms of depth <= max_depth drawn from a seeded generator, kept only
// when they normalize within `fuel` steps.
std::vector<Term> random_closed_terms(unsigned count, unsigned max_depth, std::uint64_t seed,
                                      std::size_t fuel = 10'000);

struct SuiteOptions {
  unsigned max_n = 3;
  ReductionConfig cfg{};
  SearchCaps caps{};
  unsigned random_terms = 200;
  std::uint64_t seed = 20240613;
};

const std::vector<std::string>& suite_names();  // kernel, bracket, variadic, fixpoint, all
Report run_suite(const Env& env, const std::string& suite, const SuiteOptions& opts = {});

}  // namespace varlam
