#pragma once

// Decomposition of a rational base g:
//
//   g  = +- g0^h      g0 > 0 not a perfect rational power,
//                     h = gcd of all prime exponents of |g|
//   g0 = g1 * g2^2    g1 squarefree positive integer (primes of g0
//                     with odd exponent, numerator and denominator
//                     alike), g2 positive rational
//   delta = g1 if g1 = 1 mod 4, else 4*g1
//   e = v2(h)
//   n_g: g > 0        lcm[2^(e+1), delta]
//        g < 0        2*g1 when (e=0, g1=3 mod 4) or (e=1, g1=2 mod 4),
//                     else lcm[2^(e+2), delta]
//
// n_g is the conductor-like integer deciding when the square root of
// g lands inside a cyclotomic field, which is what the epsilon factor
// in the degree formula corrects for.

#include "mulord/factor.hpp"
#include "mulord/order.hpp"

namespace mulord {

struct GDecomposition {
    RationalG g;
    int sign = 1;       // g = sign * g0^h
    u64 h = 1;
    int e = 0;          // v2(h)
    RationalG g0;
    u64 g1 = 1;         // squarefree
    u64 g2_num = 1;     // g2 > 0 rational
    u64 g2_den = 1;
    u64 delta = 1;
    u64 n_g = 1;
};

inline GDecomposition decompose(const RationalG& g) {
    GDecomposition d;
    d.g = g;
    d.sign = g.num < 0 ? -1 : 1;

    Factorization fn = factorize(abs_num(g));
    Factorization fd = factorize(u64(g.den));

    u64 h = 0;
    for (const auto& [p, e] : fn) h = std::gcd(h, u64(e));
    for (const auto& [p, e] : fd) h = std::gcd(h, u64(e));
    // |g| != 1 guarantees at least one prime, so h >= 1
    d.h = h;
    d.e = v2(h);

    u64 g0n = 1, g0d = 1, g1 = 1, g2n = 1, g2d = 1;
    for (const auto& [p, e] : fn) {
        u64 a = u64(e) / h;
        for (u64 i = 0; i < a; ++i) g0n *= p;
        if (a % 2 == 1) g1 *= p;
        for (u64 i = 0; i < a / 2; ++i) g2n *= p;
    }
    for (const auto& [p, e] : fd) {
        u64 b = u64(e) / h;
        for (u64 i = 0; i < b; ++i) g0d *= p;
        if (b % 2 == 1) g1 *= p;
        for (u64 i = 0; i < (b + 1) / 2; ++i) g2d *= p;
    }
    d.g0 = make_g(i64(g0n), i64(g0d));
    d.g1 = g1;
    d.g2_num = g2n;
    d.g2_den = g2d;

    d.delta = (g1 % 4 == 1) ? g1 : 4 * g1;

    if (d.sign > 0) {
        d.n_g = lcm_checked(u64(1) << (d.e + 1), d.delta);
    } else if ((d.e == 0 && g1 % 4 == 3) || (d.e == 1 && g1 % 4 == 2)) {
        d.n_g = 2 * g1;
    } else {
        d.n_g = lcm_checked(u64(1) << (d.e + 2), d.delta);
    }
    return d;
}

// Rebuild sign * g0^h; used to check the decomposition round-trips.
inline RationalG reconstruct(const GDecomposition& d) {
    i64 num = 1, den = 1;
    for (u64 i = 0; i < d.h; ++i) {
        num *= d.g0.num;
        den *= d.g0.den;
    }
    return make_g(d.sign * num, den);
}

}  // namespace mulord
