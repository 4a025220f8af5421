#pragma once

// Shared basics: integer typedefs, contract checks, deterministic sampling,
// and a small parallel-for used by the simulation engine and test harnesses.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace camelot {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

[[noreturn]] inline void contract_fail(const char* cond, const char* file, int line) {
    std::fprintf(stderr, "contract violation: %s (%s:%d)\n", cond, file, line);
    std::abort();
}

// Programming-contract violations abort; recoverable input problems throw.
#define CAMELOT_CHECK(cond) \
    do { if (!(cond)) ::camelot::contract_fail(#cond, __FILE__, __LINE__); } while (0)

// Uniform draw in [0, n). Hand-rolled rejection sampling so that seeded runs
// are bit-reproducible across standard library implementations.
inline u64 uniform_u64(std::mt19937_64& rng, u64 n) {
    CAMELOT_CHECK(n > 0);
    const u64 rem = (0 - n) % n;   // 2^64 mod n
    if (rem == 0) return rng() % n;
    const u64 limit = 0 - rem;     // largest multiple of n representable
    u64 x;
    do { x = rng(); } while (x >= limit);
    return x % n;
}

inline unsigned hardware_threads() {
    unsigned t = std::thread::hardware_concurrency();
    return t == 0 ? 1 : t;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers. fn must only touch
// per-index state; results land in caller-owned slots, so scheduling order
// cannot affect the outcome.
inline void parallel_for(u64 n, unsigned threads, const std::function<void(u64)>& fn) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (u64 i = 0; i < n; i++) fn(i);
        return;
    }
    unsigned workers = threads;
    if (static_cast<u64>(workers) > n) workers = static_cast<unsigned>(n);
    std::atomic<u64> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back([&]() {
            for (;;) {
                u64 i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
    double sec() const { return ms() / 1000.0; }
};

}  // namespace camelot
