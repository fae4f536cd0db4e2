#ifndef CELLFORMS_PARALLEL_HPP
#define CELLFORMS_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>

namespace cellforms {

// Worker count: CELLFORM_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_count();

// Calls body(i) for i in [0, count). Work is split into contiguous index
// blocks, so results written per index do not depend on the thread count.
// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cellforms

#endif  // CELLFORMS_PARALLEL_HPP
