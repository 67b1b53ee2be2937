#ifndef VW_PARALLEL_HPP
#define VW_PARALLEL_HPP

#include <functional>

namespace vw {

// Thread cap taken from VW_THREADS (falls back to hardware concurrency).
long thread_budget();

// Runs fn(i) for i in [0, n). Results must be written to per-index slots by
// the caller; chunk scheduling is static so output stays deterministic.
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace vw

#endif
