#pragma once

#include <vector>

#include "varlam/engine.hpp"
#include "varlam/term.hpp"

namespace varlam {

// λs z. s^n z
Term church(unsigned n);

// Applies t to two fresh variables, normalizes and counts the spine.
// Throws NotANumeral, or Reduction when the fuel or size limit is hit.
unsigned unchurch(const Term& t, const Env& env, const ReductionConfig& cfg = {});

// λz. z E1 ... En
Term tuple(const std::vector<Term>& components);

// λx1 ... xn. xk, 1 <= k <= n
Term selector(unsigned k, unsigned n);
// λx. x σ_k^n
Term projection(unsigned k, unsigned n);

}  // namespace varlam
