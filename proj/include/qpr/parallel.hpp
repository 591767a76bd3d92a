#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qpr {

inline unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Calls fn(i) for i in [0, count) on up to `jobs` threads. Work items must be
/// independent; callers write results into slot i so the merge order never
/// depends on scheduling. The exception from the lowest failing index is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    if (count == 0) return;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, jobs), count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    threads.clear();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace qpr
