#pragma once

// Deterministic block-parallel execution. The range [lo, hi] is cut
// into fixed-width blocks (the width never depends on the worker
// count), workers claim block indices through an atomic counter, and
// callers fold the per-block results strictly in block order. Every
// derived number is therefore identical for 1 worker and for N.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#include "mulord/base.hpp"

namespace mulord {

struct Block {
    u64 index;
    u64 lo;  // inclusive
    u64 hi;  // inclusive
};

// fn: Block -> R. Returns one R per block, ordered by block index.
template <class R, class Fn>
std::vector<R> run_blocks(u64 lo, u64 hi, u64 width, int workers, Fn&& fn) {
    std::vector<R> results;
    if (lo > hi) return results;
    u64 nblocks = (hi - lo) / width + 1;
    results.resize(nblocks);
    std::atomic<u64> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    auto work = [&] {
        for (;;) {
            u64 b = next.fetch_add(1);
            if (b >= nblocks || failed.load()) return;
            u64 blo = lo + b * width;
            u64 bhi = std::min(hi, blo + width - 1);
            try {
                results[b] = fn(Block{b, blo, bhi});
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    int w = std::max(1, workers);
    if (w == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(w));
        for (int i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return results;
}

// Default worker count: MULORD_WORKERS if set, else 1.
inline int env_workers() {
    const char* s = std::getenv("MULORD_WORKERS");
    if (s == nullptr || *s == '\0') return 1;
    long v = std::strtol(s, nullptr, 10);
    return int(std::clamp(v, 1L, 1024L));
}

}  // namespace mulord
