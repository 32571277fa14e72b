#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qder {

// Worker count: explicit request > QDERANGE_THREADS > hardware concurrency.
inline int resolve_thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QDERANGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(worker_index) on `threads` workers and joins. Workers own
// disjoint accumulator slots; callers merge slot results in fixed index
// order, so output is deterministic regardless of scheduling.
inline void run_workers(int threads, const std::function<void(int)>& body) {
    if (threads <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
}

}  // namespace qder
