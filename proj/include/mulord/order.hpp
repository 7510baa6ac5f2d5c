#pragma once

// Multiplicative orders and indices.
//
// order_mod reduces lambda(n) through the prime factorization of
// lambda(n): start at t = lambda(n) and divide out each prime of t
// while g^(t/q) stays 1. This is the standard group-theoretic
// refinement; there is no linear search anywhere.
//
// Bad moduli: for a prime p dividing numerator or denominator the
// order is 1 by convention. For a composite modulus sharing a factor
// the quantity is undefined and we refuse it; silently extending the
// prime convention would corrupt every average built on top.

#include "mulord/factor.hpp"
#include "mulord/rational.hpp"

namespace mulord {

// Least k >= 1 with a^k = 1 mod n, given that t is a multiple of the
// order (callers pass lambda(n) or p-1).
inline u64 order_from_multiple(u64 a, u64 n, u64 t, const Factorization& t_factors) {
    for (const auto& [q, e] : t_factors) {
        for (int i = 0; i < e; ++i) {
            if (powmod(a, t / q, n) == 1) {
                t /= q;
            } else {
                break;
            }
        }
    }
    return t;
}

inline u64 order_mod(const RationalG& g, u64 n) {
    if (n == 0) throw domain_error("order_mod: n must be positive");
    if (n == 1) return 1;
    if (shares_factor(g, n)) {
        if (is_prime(n)) return 1;  // bad-prime convention
        throw domain_error("order_mod: composite n = " + std::to_string(n) +
                           " shares a factor with g = " + to_string(g));
    }
    u64 a = residue_mod(g, n);
    if (a == 1) return 1;
    u64 lam = carmichael_lambda(factorize(n));
    return order_from_multiple(a, n, lam, factorize(lam));
}

// i_g(p) = (p-1) / ell_g(p); equals p-1 at bad primes.
inline u64 index_mod_prime(const RationalG& g, u64 p) {
    if (!is_prime(p)) throw domain_error("index_mod_prime: p = " + std::to_string(p) + " is not prime");
    return (p - 1) / order_mod(g, p);
}

}  // namespace mulord
