#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace distlab {

// Worker cap: DISTLAB_THREADS if set, otherwise the machine default.
inline int worker_count() {
    if (const char* env = std::getenv("DISTLAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(worker, i) for i in [0, count) across workers; the worker id lets
// callers reuse per-thread scratch. Results must be written to per-index
// slots, which keeps any later reduction deterministic regardless of
// scheduling.
inline void parallel_for(int count, const std::function<void(int, int)>& fn, int workers = 0) {
    if (workers <= 0) workers = worker_count();
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(0, i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                fn(w, i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace distlab
