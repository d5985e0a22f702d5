#pragma once

#include <cstddef>
#include <functional>

namespace spearlab {

/// Upper bound on worker threads used by library loops (default 1).
void set_jobs(std::size_t jobs);
std::size_t jobs();

/// Calls body(i) for i in [0, count). Work is split into contiguous chunks
/// across at most jobs() threads; body must only write to slot i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace spearlab
