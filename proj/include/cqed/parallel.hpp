#ifndef CQED_PARALLEL_HPP
#define CQED_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cqed {

// Worker count: CQED_THREADS if set to a positive integer, otherwise the
// hardware concurrency. Always >= 1.
unsigned max_threads();

// Runs fn(i) for i in [0, n). Work items write to disjoint slots, so results
// are assembled in input order no matter how the pool schedules them.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cqed

#endif
