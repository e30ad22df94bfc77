#pragma once

#include <cstddef>
#include <functional>

namespace varlam {

// Runs fn on a thread with a large stack and rethrows whatever it throws.
// Reduction, printing and destruction recurse on term depth, and normal-order
// reduction of a non-terminating term can build terms millions of levels deep.
// Calls made while already on such a thread run inline.
void with_large_stack(const std::function<void()>& fn,
                      std::size_t stack_bytes = std::size_t{1} << 30);

}  // namespace varlam
