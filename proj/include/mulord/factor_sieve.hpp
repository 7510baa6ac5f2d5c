#pragma once

// Batch factorization of an interval: for every n in [base, base + n),
// emit each prime power q^e || n exactly once by sieving multiples of
// the primes up to sqrt(base + n - 1) and dividing them out of a
// remainder table. Whatever remains above 1 afterwards is a single
// prime factor larger than the square root.
//
// This is the performance-critical path for every survey operation:
// it replaces per-number factorization with one cache-friendly sweep.

#include <vector>

#include "mulord/primes.hpp"

namespace mulord {

// visit(offset, q, e) is called for each prime power q^e || (base + offset),
// offsets in [0, count). Entries with value 0 or 1 get no calls.
template <class Visit>
void factored_range(u64 base, u64 count, const std::vector<u32>& base_primes, Visit&& visit) {
    if (count == 0) return;
    u64 hi = base + count - 1;
    std::vector<u64> rem(count);
    for (u64 i = 0; i < count; ++i) rem[i] = base + i;
    if (base == 0) rem[0] = 1;  // no factor events for 0

    for (u32 q : base_primes) {
        u64 qq = u64(q) * q;
        if (qq > hi) break;
        u64 start = (base + q - 1) / q * q;
        if (start < q) start = q;  // n = q itself is handled here, not as leftover
        for (u64 m = start; m <= hi; m += q) {
            u64 i = m - base;
            int e = 0;
            while (rem[i] % q == 0) {
                rem[i] /= q;
                ++e;
            }
            if (e > 0) visit(i, u64(q), e);
        }
    }
    for (u64 i = 0; i < count; ++i) {
        if (rem[i] > 1) visit(i, rem[i], 1);
    }
}

}  // namespace mulord
