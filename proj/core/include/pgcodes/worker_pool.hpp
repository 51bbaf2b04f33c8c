#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace pgcodes {

// Runs fn(begin, end) over [0, total) split into contiguous blocks, one per
// worker. workers <= 1 runs inline on the calling thread. Callers own any
// shared-state discipline; block ranges never overlap.
inline void parallel_blocks(int64_t total, int workers,
                            const std::function<void(int64_t, int64_t)>& fn) {
    if (workers <= 1 || total < 2) {
        if (total > 0) fn(0, total);
        return;
    }
    int64_t w = std::min<int64_t>(workers, total);
    int64_t chunk = (total + w - 1) / w;
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(w));
    for (int64_t t = 0; t < w; ++t) {
        int64_t lo = t * chunk;
        int64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace pgcodes
