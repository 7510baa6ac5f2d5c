#pragma once

// Primality testing and prime enumeration.
//
// is_prime      deterministic Miller-Rabin, correct for every 64-bit input
//               (first twelve prime bases; see Sorenson & Webster,
//               Math. Comp. 86 (2017), valid beyond 3.3e24)
// primes_up_to  simple monolithic sieve, for base-prime tables
// for_each_prime  segmented odd-only sieve over an inclusive range;
//               memory stays O(sqrt(hi) + segment)

#include <cstring>
#include <vector>

#include "mulord/modmath.hpp"

namespace mulord {

namespace detail {
inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}
}  // namespace detail

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = v2(d);
    d >>= s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

inline std::vector<u32> primes_up_to(u32 limit) {
    std::vector<u32> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i) {
        if (!comp[i]) {
            for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    for (u32 i = 2; i <= limit; ++i) {
        if (!comp[i]) out.push_back(i);
    }
    return out;
}

// Calls f(p) for every prime p in [lo, hi], in increasing order.
template <class F>
void for_each_prime(u64 lo, u64 hi, F&& f) {
    if (hi < 2 || lo > hi) return;
    if (lo <= 2) {
        f(u64(2));
        lo = 3;
    }
    if (lo % 2 == 0) ++lo;
    if (lo > hi) return;

    u64 root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<u32> base = primes_up_to(u32(root));

    constexpr u64 kSegment = 1u << 20;  // odd numbers per segment
    std::vector<char> comp(kSegment);
    for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += 2 * kSegment) {
        u64 seg_hi = seg_lo + 2 * (kSegment - 1);
        if (seg_hi > hi) seg_hi = hi;
        u64 count = (seg_hi - seg_lo) / 2 + 1;
        std::memset(comp.data(), 0, count);
        for (u32 p : base) {
            if (p == 2) continue;
            u64 pp = u64(p) * p;
            if (pp > seg_hi) break;
            u64 start = pp;
            if (start < seg_lo) {
                u64 k = (seg_lo + p - 1) / p;
                if (k % 2 == 0) ++k;  // odd multiples only
                start = k * p;
            }
            for (u64 m = start; m <= seg_hi; m += 2 * p) comp[(m - seg_lo) / 2] = 1;
        }
        for (u64 i = 0; i < count; ++i) {
            if (!comp[i]) f(seg_lo + 2 * i);
        }
    }
}

inline u64 prime_count(u64 x) {
    u64 n = 0;
    for_each_prime(2, x, [&](u64) { ++n; });
    return n;
}

}  // namespace mulord
