#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nlab {

// Worker cap: min(hardware_concurrency, NUCLEUS_LAB_THREADS). Always >= 1.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("NUCLEUS_LAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Static block partition of [0, n); body(i) must write only to slots owned by i,
// so the result is identical to the serial loop.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    unsigned workers = worker_count();
    if (n < 64 || workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    if (static_cast<unsigned>(n) < workers) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
        int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
        pool.emplace_back([lo, hi, &body] {
            for (int i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace nlab
