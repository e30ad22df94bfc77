#pragma once

#include "varlam/metagen.hpp"
#include "varlam/term.hpp"

namespace varlam {

// Turner's algorithm over {I, K, B, C, S}: every abstraction in t is compiled
// away. Constants of t are kept as opaque leaves.
Term turner(const Term& t);

// The extended algorithm over {I, K, B, C, S, VarI, VarK, VarB, VarC, VarS}.
// Sequence binders are abstracted as blocks; the result mentions the index
// variable of m free, applied to the variadic constants. Throws
// MixedSequenceUse when a sequence is used in a shape no rule covers.
Term extended(const MetaTerm& m);

// λn. extended(m), with n the index variable of m.
Term extended_closed(const MetaTerm& m);

}  // namespace varlam
