#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace tenslab {

// Runs fn(worker, begin, end) over a static partition of [0, count).
// Callers own the reduction; keep it order-deterministic.
inline void parallel_chunks(std::uint64_t count, int threads,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || count < 2) {
        fn(0, 0, count);
        return;
    }
    const int nt = static_cast<int>(std::min<std::uint64_t>(threads, count));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + nt - 1) / nt;
    for (int w = 0; w < nt; ++w) {
        const std::uint64_t b = w * chunk;
        const std::uint64_t e = std::min(count, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, w, b, e);
    }
    for (auto& t : pool) t.join();
}

}  // namespace tenslab
