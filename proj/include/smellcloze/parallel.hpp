#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace smellcloze {

inline unsigned resolve_jobs(unsigned jobs) noexcept {
    if (jobs != 0)
        return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for every i in [0, count) on up to `jobs` threads. Each index is
// handled exactly once; callers write results into slot i so output order
// never depends on scheduling. The first exception (lowest index) is
// rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace smellcloze
