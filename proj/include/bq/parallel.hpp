#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace bq {

// Worker count: min(hardware, BIQUANDLE_THREADS if set, jobs).
inline int thread_budget(int jobs) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("BIQUANDLE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw < jobs ? hw : (jobs < 1 ? 1 : jobs);
}

// Runs fn(i) for i in [0, jobs) across threads; results are indexed by i, so
// output order is deterministic regardless of scheduling.
inline void parallel_for(int jobs, const std::function<void(int)>& fn) {
    int workers = thread_budget(jobs);
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < jobs; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace bq
