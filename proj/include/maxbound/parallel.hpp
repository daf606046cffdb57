#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <thread>
#include <vector>

namespace maxbound {

/// Worker count: MAXBOUND_THREADS if set, else hardware concurrency,
/// clamped to [1, 64].
inline unsigned thread_count() {
    if (const char* env = std::getenv("MAXBOUND_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(std::min(v, 64L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    return std::clamp(hc, 1u, 64u);
}

/// Runs fn(i) for i in [0, n). Each index is computed exactly once and the
/// work is independent per index, so the result is identical for any worker
/// count. Callers needing reductions write per-index results and reduce
/// serially in index order.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace maxbound
