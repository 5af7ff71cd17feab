#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rashomon {

// Worker count: RASHOMON_WORKERS env var, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("RASHOMON_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : std::min(hw, 16u);
}

// Static partition of [0,count) across workers. Each worker reduces its
// chunk into its own accumulator; chunks are merged in index order, so the
// result is independent of the worker count as long as `reduce` folds
// order-independent quantities (integer counts, minima).
template <typename Acc>
void parallel_chunks(long long count, Acc init,
                     const std::function<void(long long, Acc&)>& body,
                     const std::function<void(Acc&, const Acc&)>& merge, Acc& out) {
    unsigned workers = worker_count();
    if (count < 1024 || workers <= 1) {
        out = init;
        for (long long i = 0; i < count; ++i) body(i, out);
        return;
    }
    std::vector<Acc> partial(workers, init);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const long long lo = static_cast<long long>(w) * chunk;
        const long long hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] {
            try {
                for (long long i = lo; i < hi; ++i) body(i, partial[w]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    out = init;
    for (const auto& p : partial) merge(out, p);
}

}  // namespace rashomon
