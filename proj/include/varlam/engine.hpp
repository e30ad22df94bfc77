#pragma once

#include <cstddef>
#include <vector>

#include "varlam/env.hpp"
#include "varlam/term.hpp"

namespace varlam {

struct ReductionConfig {
  std::size_t fuel = 1'000'000;           // β-steps
  std::size_t max_term_size = 1'000'000;  // nodes
  bool eta = true;
};

enum class ReductionStatus { NormalForm, FuelExhausted, SizeExceeded };

const char* status_name(ReductionStatus s);

struct ReductionOutcome {
  ReductionStatus status;
  Term result;  // normal form, or the last term reached
  std::size_t steps;
};

// Leftmost-outermost β-reduction to normal form, then (with cfg.eta)
// exhaustive η-contraction of the β-normal form.
ReductionOutcome normalize(const Term& t, const Env& env, const ReductionConfig& cfg = {});

// Normal-order reduction sequence starting with t (β only).
std::vector<Term> trace(const Term& t, const Env& env, const ReductionConfig& cfg = {});

enum class Verdict { Equal, NotEqual, Unknown };

const char* verdict_name(Verdict v);

struct Comparison {
  Verdict verdict;
  ReductionOutcome left;
  ReductionOutcome right;
};

// βη-equality decided by comparing normal forms.
Comparison compare(const Term& a, const Term& b, const Env& env, const ReductionConfig& cfg = {});
inline Verdict beta_eta_equal(const Term& a, const Term& b, const Env& env,
                              const ReductionConfig& cfg = {}) {
  return compare(a, b, env, cfg).verdict;
}

struct SearchResult {
  bool reached = false;
  bool inconclusive = false;  // a cap was hit before the space was exhausted
  std::size_t visited = 0;
  std::size_t depth = 0;      // depth at which the target was found, or last depth explored
};

// Breadth-first search over one-step β-reducts (every redex position), visited
// terms identified up to α. True when a term α-equal to the expanded target is seen.
SearchResult reduces_to(const Term& a, const Term& target, const Env& env, std::size_t node_cap,
                        std::size_t depth_cap, std::size_t max_term_size = 100'000);

// All terms reachable from t in exactly one β-step, one per redex position,
// leftmost-outermost first.
std::vector<Term> one_step_reducts(const Term& t, const Env& env);

// True when t contains a β-redex (or an η-redex when `eta`).
bool has_redex(const Term& t, bool eta);

}  // namespace varlam
