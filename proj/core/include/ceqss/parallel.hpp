#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ceqss {

// Runs fn(0..count-1) across up to jobs threads. Blocks until done. fn must
// be safe to call concurrently for distinct indices.
inline void parallel_for_index(std::size_t count, unsigned jobs,
                               const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace ceqss
