#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace harmcert::detail {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [first, last] into contiguous chunks and runs fn(chunk_first,
// chunk_last) on each, one thread per chunk. The first exception thrown by a
// worker is rethrown on the calling thread.
template <typename Fn>
void for_each_chunk(std::uint64_t first, std::uint64_t last, unsigned threads, Fn fn)
{
    const std::uint64_t count = last - first + 1;
    const std::uint64_t workers = std::min<std::uint64_t>(resolve_threads(threads), count);
    if (workers <= 1) {
        fn(first, last);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t base = count / workers;
    const std::uint64_t extra = count % workers;
    std::uint64_t start = first;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t size = base + (w < extra ? 1 : 0);
        const std::uint64_t stop = start + size - 1;
        pool.emplace_back([&, start, stop] {
            try {
                fn(start, stop);
            } catch (...) {
                const std::scoped_lock lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
        start = stop + 1;
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace harmcert::detail
