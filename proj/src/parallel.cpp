#include "mexq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace mexq {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) noexcept { g_threads.store(std::max(1u, n)); }

unsigned thread_count() noexcept { return g_threads.load(); }

void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body)
{
    if (n <= 0)
        return;
    const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(thread_count(), n));
    if (workers <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t lo = n * w / workers;
        const std::int64_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    pool.clear();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace mexq
