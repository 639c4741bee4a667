#pragma once

#include <future>
#include <thread>
#include <vector>

namespace sunit {

inline unsigned effective_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Apply f(i) for i in [0, n) on a worker pool; results come back indexed by i,
// so output order never depends on the worker count.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned workers, F f) {
    std::vector<R> out(n);
    const unsigned w = effective_workers(workers);
    if (w <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (unsigned t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = f(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace sunit
