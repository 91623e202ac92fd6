#pragma once

#include <cstddef>
#include <functional>

namespace orgc {

// Worker count used by all sharded computations. Results never depend on it.
void set_thread_count(unsigned threads);
unsigned thread_count();

// Calls body(i) for i in [0, n). Bodies must only write to slot i of
// caller-owned storage; merging happens afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace orgc
