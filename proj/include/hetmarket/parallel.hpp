#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hetmarket {

// Worker count: HETMARKET_THREADS if set and positive, else all hardware
// threads.  HETMARKET_THREADS=1 forces serial execution.
inline unsigned resolve_threads() {
    if (const char* env = std::getenv("HETMARKET_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, n).  Work is claimed in fixed-size chunks via an
// atomic cursor; callers must make fn(i) depend only on i so the outcome is
// independent of the thread count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned threads = resolve_threads();
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t chunk = 8;
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = cursor.fetch_add(chunk);
            if (begin >= n) return;
            const std::size_t end = begin + chunk < n ? begin + chunk : n;
            for (std::size_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

} // namespace hetmarket
