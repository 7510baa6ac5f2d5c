#pragma once

// Integer factorization up to word size, and the multiplicative
// functions built on top of it: phi, Carmichael lambda, rad, omega,
// tau, divisor lists.
//
// Strategy: trial division by a small sieved prime table, then
// Miller-Rabin plus Brent's variant of Pollard rho on the cofactor.
// Rho uses a fixed polynomial-offset sequence so results (and run
// time) are reproducible.

#include <algorithm>
#include <vector>

#include "mulord/primes.hpp"

namespace mulord {

struct PrimePower {
    u64 p;
    int e;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition ordered by increasing prime. The empty
// list is 1.
using Factorization = std::vector<PrimePower>;

namespace detail {

inline const std::vector<u32>& trial_primes() {
    static const std::vector<u32> table = primes_up_to(1 << 16);
    return table;
}

// Brent cycle-finding rho; n must be odd, composite, not a prime power
// caught by the caller. Returns a nontrivial factor.
inline u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = y;
        const u64 m = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& primes_out) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, primes_out);
    factor_rec(n / d, primes_out);
}

}  // namespace detail

inline Factorization factorize(u64 n) {
    if (n == 0) throw domain_error("factorize: n must be positive");
    Factorization out;
    for (u32 p : detail::trial_primes()) {
        if (u64(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    }
    if (n > 1) {
        std::vector<u64> rest;
        detail::factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.push_back({rest[i], int(j - i)});
            i = j;
        }
    }
    return out;
}

inline u64 eval(const Factorization& f) {
    u64 v = 1;
    for (const auto& [p, e] : f) {
        for (int i = 0; i < e; ++i) v *= p;
    }
    return v;
}

inline u64 euler_phi(const Factorization& f) {
    u64 v = 1;
    for (const auto& [p, e] : f) {
        v *= p - 1;
        for (int i = 1; i < e; ++i) v *= p;
    }
    return v;
}

// Carmichael function: lambda(2)=1, lambda(4)=2, lambda(2^k)=2^(k-2)
// for k >= 3, lambda(p^k)=phi(p^k) for odd p, lcm over prime powers.
inline u64 carmichael_lambda(const Factorization& f) {
    u64 l = 1;
    for (const auto& [p, e] : f) {
        u64 lp;
        if (p == 2) {
            lp = e == 1 ? 1 : (e == 2 ? 2 : u64(1) << (e - 2));
        } else {
            lp = p - 1;
            for (int i = 1; i < e; ++i) lp *= p;
        }
        l = lcm_checked(l, lp);
    }
    return l;
}

inline u64 radical(const Factorization& f) {
    u64 v = 1;
    for (const auto& [p, e] : f) v *= p;
    return v;
}

inline int omega(const Factorization& f) { return int(f.size()); }

inline u64 tau(const Factorization& f) {
    u64 v = 1;
    for (const auto& [p, e] : f) v *= u64(e) + 1;
    return v;
}

struct MultiplicativeBasics {
    u64 phi;
    u64 lambda;
    u64 rad;
    int omega;
    u64 tau;
};

inline MultiplicativeBasics multiplicative_basics(const Factorization& f) {
    return {euler_phi(f), carmichael_lambda(f), radical(f), omega(f), tau(f)};
}

inline MultiplicativeBasics multiplicative_basics(u64 n) {
    return multiplicative_basics(factorize(n));
}

inline std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f) {
        size_t n = out.size();
        u64 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < n; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mulord
