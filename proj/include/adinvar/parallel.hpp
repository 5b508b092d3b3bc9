#pragma once

#include <cstddef>
#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace adinvar {

/// Worker count for sweeps: ADINVAR_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls f(i) for i in [0, n) on up to thread_count() threads. Each index is
/// handled exactly once; the first exception thrown is rethrown here.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const std::size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace adinvar
