#pragma once

// Wagstaff's degree formula. The splitting field of x^k - g over the
// rationals has degree
//
//   D_g(k) = phi(k) * k / ((k,h) * eps_g(k)),
//
// where eps_g(k) in {2, 1, 1/2} corrects for sqrt(g0) lying inside the
// k-th cyclotomic field:
//   g > 0:  2 if n_g | k, else 1
//   g < 0:  2 if n_g | k; 1/2 if 2 | k and 2^(e+1) does not divide k;
//           1 otherwise   (the cases are mutually exclusive because
//           2^(e+1) | n_g when g < 0)
//
// eps is kept exact (an enum standing for a rational), the division is
// checked, and a failed check is a logic error, not a domain error.

#include "mulord/decompose.hpp"

namespace mulord {

enum class Epsilon { two, one, half };

inline const char* epsilon_str(Epsilon e) {
    switch (e) {
        case Epsilon::two: return "2";
        case Epsilon::half: return "1/2";
        default: return "1";
    }
}

inline Epsilon epsilon_g(const GDecomposition& d, u64 k) {
    if (k == 0) throw domain_error("epsilon_g: k >= 1 required");
    if (k % d.n_g == 0) return Epsilon::two;
    if (d.sign < 0 && k % 2 == 0 && k % (u64(1) << (d.e + 1)) != 0) return Epsilon::half;
    return Epsilon::one;
}

constexpr u64 kKummerMaxK = 1'000'000'000;  // keeps phi(k)*k*2 inside 128 bits with room

// Degree from a precomputed phi(k); the sieve-driven series evaluation
// calls this directly.
inline u64 kummer_degree_value(const GDecomposition& d, u64 k, u64 phi_k) {
    if (k == 0 || k > kKummerMaxK) throw domain_error("kummer_degree: k out of range [1, 1e9]");
    Epsilon eps = epsilon_g(d, k);
    u128 num = u128(phi_k) * k * (eps == Epsilon::half ? 2 : 1);
    u64 den = std::gcd(k, d.h) * (eps == Epsilon::two ? u64(2) : u64(1));
    if (num % den != 0) throw std::logic_error("kummer_degree: division is not exact");
    return u64(num / den);
}

struct ExactKummerDegree {
    u64 k;
    u64 degree;
    Epsilon epsilon;
};

inline ExactKummerDegree kummer_degree(const GDecomposition& d, u64 k) {
    if (k == 0 || k > kKummerMaxK) throw domain_error("kummer_degree: k out of range [1, 1e9]");
    u64 phi_k = euler_phi(factorize(k));
    return {k, kummer_degree_value(d, k, phi_k), epsilon_g(d, k)};
}

}  // namespace mulord
