#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace collatz::detail {

inline unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(chunk_index, offset_begin, offset_end) over [0, total) split
/// into fixed chunks, claimed dynamically by up to `workers` threads.
/// Chunk boundaries depend only on (total, chunk_size), so per-chunk
/// results merged in chunk order are identical for any worker count.
template <typename Fn>
void for_each_chunk(std::uint64_t total, std::uint64_t chunk_size,
                    unsigned workers, std::uint64_t num_chunks, Fn&& fn) {
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= num_chunks) return;
            const std::uint64_t lo = c * chunk_size;
            const std::uint64_t hi = std::min(total, lo + chunk_size);
            try {
                fn(c, lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::uint64_t>(workers, num_chunks));
    if (n_threads <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace collatz::detail
