#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace zetalab {

int default_thread_count();

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is dealt out
// by an atomic counter, so callers must not rely on assignment order; all
// zetalab callers write to disjoint slots and merge in fixed index order,
// which keeps results bitwise identical for every thread count.
void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace zetalab
