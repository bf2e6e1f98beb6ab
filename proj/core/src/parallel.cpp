#include "stabledrift/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace stabledrift {

unsigned worker_count_from_env(unsigned fallback) {
    if (const char* raw = std::getenv("STABLEDRIFT_THREADS")) {
        try {
            const long v = std::stol(raw);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    if (fallback > 0)
        return fallback;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t)>& body) {
    if (n == 0)
        return;
    if (n_threads == 0)
        n_threads = worker_count_from_env();
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(n_threads, n));

    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(run);
    for (auto& th : pool)
        th.join();

    if (error)
        std::rethrow_exception(error);
}

} // namespace stabledrift
