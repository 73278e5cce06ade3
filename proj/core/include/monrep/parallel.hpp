#pragma once

#include <cstddef>
#include <functional>

namespace monrep {

// Runs fn(0..count-1), spread over `threads` workers when threads > 1.
// Results must be written to disjoint slots; merge order is the caller's.
void parallel_for(size_t count, int threads,
                  const std::function<void(size_t)>& fn);

}  // namespace monrep
