#pragma once

#include <cstddef>
#include <functional>

namespace loctrig {

/// Caps the number of worker threads used by data-parallel loops.
/// A value of 0 restores the default (hardware concurrency).
void set_max_threads(unsigned count);
unsigned max_threads();

/// Runs body(i) for i in [begin, end), splitting the range into contiguous
/// chunks over at most max_threads() workers. Bodies must only write to
/// disjoint output slots. Exceptions thrown by a body are rethrown on the
/// calling thread after all workers join.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace loctrig
