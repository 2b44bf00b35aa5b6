#ifndef TROPMLE_PARALLEL_HPP
#define TROPMLE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace tropmle {

// Upper bound for worker threads used by the per-basis loops.
// 0 restores the default (hardware concurrency).
void set_max_threads(unsigned n);
unsigned max_threads();

// Runs fn(i) for i in [0, count). Work is split into contiguous chunks;
// callers must write results into disjoint slots so the outcome does not
// depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace tropmle

#endif
