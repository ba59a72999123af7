#pragma once

#include <cstddef>
#include <functional>

namespace distspec {

/// Worker count for internal parallel loops: DISTSPEC_THREADS if set to a
/// positive integer, otherwise the hardware concurrency. Never affects results.
unsigned thread_count();

/// Runs body(i) for i in [0, count), in contiguous blocks over thread_count()
/// workers. body must only write to per-index state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace distspec
