#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pfh {

/// Worker count: PFH_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_count();
/// Overrides PFH_THREADS for this process (0 restores the default).
void set_thread_count(unsigned n);

/// out[i] = fn(in[i]). Results land by index, so output does not depend on
/// scheduling. The first exception thrown by any task is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, Fn fn) -> std::vector<decltype(fn(in[0]))>
{
    using Out = decltype(fn(in[0]));
    std::vector<Out> out(in.size());
    unsigned workers = std::min<std::size_t>(thread_count(), in.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < in.size(); ++i)
            out[i] = fn(in[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < in.size(); i = next++) {
                    try {
                        out[i] = fn(in[i]);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                    }
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace pfh
