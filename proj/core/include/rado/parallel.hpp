#pragma once

#include <cstddef>
#include <functional>

namespace rado {

// Runs fn(i) for every i in [0, count) on up to `threads` workers (0 means
// one). Callers write results by index, so output never depends on the
// worker count. The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace rado
