#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hm {

/// Worker count: HM_THREADS when set (minimum 1), else hardware concurrency.
inline int thread_cap() {
    if (const char* env = std::getenv("HM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

/// Calls f(chunk) exactly once for every chunk in [0, chunk_count). Workers
/// pull chunks from a shared counter; callers must write results into
/// per-chunk slots so that aggregation order does not depend on scheduling.
template <typename F>
void parallel_chunks(long long chunk_count, F&& f) {
    const long long threads = std::min<long long>(thread_cap(), chunk_count);
    if (threads <= 1) {
        for (long long c = 0; c < chunk_count; ++c) f(c);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const long long c = next.fetch_add(1);
            if (c >= chunk_count || failed.load()) return;
            try {
                f(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (long long i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hm
