#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace monodesc {

// Runs work(0..count-1) on up to `jobs` threads; rethrows the first error.
inline void run_parallel(int jobs, int count, const std::function<void(int)>& work) {
    if (jobs <= 1 || count <= 1) {
        for (int k = 0; k < count; ++k) work(k);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto runner = [&]() {
        for (;;) {
            int k = next.fetch_add(1);
            if (k >= count) return;
            try {
                work(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min(jobs, count);
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace monodesc
