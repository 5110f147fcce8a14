#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace insdel {

/// Worker count: min(hardware, INSDEL_MAX_PARALLEL). At least 1.
inline unsigned max_parallel() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("INSDEL_MAX_PARALLEL")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

/// Runs body(i) for i in [begin, end) across worker threads, static block
/// partition. body must be safe to call concurrently for distinct i.
inline void parallel_for(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t)>& body) {
    std::int64_t count = end - begin;
    if (count <= 0) return;
    unsigned workers = max_parallel();
    if (workers <= 1 || count == 1) {
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
    if (static_cast<std::int64_t>(workers) > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::int64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::int64_t lo = begin + chunk * w;
        std::int64_t hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &body] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace insdel
