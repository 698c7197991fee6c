#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace qmusik::detail {

/// Deterministic pairwise (tree) reduction of a buffer of partial terms.
/// The result depends only on the buffer contents and order, never on
/// how the terms were produced.
inline double pairwise_sum(std::span<const double> terms) {
    const std::size_t n = terms.size();
    if (n <= 16) {
        double acc = 0.0;
        for (double t : terms) acc += t;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

/// Static-partition parallel loop over [0, n). Each index is processed by
/// exactly one thread; per-index work must write to disjoint slots so the
/// outcome is independent of the schedule. Worker exceptions are rethrown
/// on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qmusik::detail
