#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qcorr_tools {

// Runs body(i) for every i in [0, n) across hardware threads in contiguous
// blocks.  Each index is computed exactly once from its own random stream, so
// callers that store results by index get output independent of scheduling.
template <class Body>
void parallel_indices(std::uint64_t n, Body&& body) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min(workers, 32u);
    if (n < 256 || workers == 1) {
        for (std::uint64_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
        const std::uint64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::uint64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qcorr_tools
