#pragma once

// 64-bit modular arithmetic with 128-bit intermediates.

#include <bit>
#include <numeric>

#include "mulord/base.hpp"

namespace mulord {

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline u64 invmod(u64 a, u64 m) {
    a %= m;
    i64 t = 0, newt = 1;
    u64 r = m, newr = a;
    while (newr != 0) {
        u64 q = r / newr;
        i64 tt = t - i64(q) * newt;
        t = newt;
        newt = tt;
        u64 rr = r - q * newr;
        r = newr;
        newr = rr;
    }
    if (r != 1) throw domain_error("invmod: arguments are not coprime");
    return t < 0 ? u64(t + i64(m)) : u64(t);
}

// lcm with an overflow check; callers only use it where the true lcm
// fits (orders and lambda values are bounded by the modulus).
inline u64 lcm_checked(u64 a, u64 b) {
    u64 g = std::gcd(a, b);
    u64 q = a / g;
    if (b != 0 && q > UINT64_MAX / b) throw std::logic_error("lcm_checked: overflow");
    return q * b;
}

inline int v2(u64 n) { return n == 0 ? 0 : std::countr_zero(n); }

// p-adic valuation.
inline int valuation(u64 n, u64 p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace mulord
