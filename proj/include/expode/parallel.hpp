#pragma once
// Deterministic fork-join helper.  Thread count capped by the EXPODE_THREADS
// environment variable (default: hardware concurrency); each index writes
// only its own slot, so results are identical at any thread count.

#include <functional>

namespace expode {

int thread_cap();

// Runs fn(0..n-1), possibly concurrently.  Exceptions are rethrown on the
// calling thread (first one wins).
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace expode
