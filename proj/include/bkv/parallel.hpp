#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace bkv {

// Dynamic scheduling over [0, count); results land wherever the callback
// writes them (callers pre-size per-index slots, so merge order is the input
// order regardless of thread interleaving).
inline void parallel_for(long count, int workers, const std::function<void(long)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<long>(workers, count));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                const long i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace bkv
