// Walkthrough: orders, indices, decompositions, and Kummer degrees
// for a handful of bases.

#include <iostream>

#include "mulord/decompose.hpp"
#include "mulord/kummer.hpp"
#include "mulord/order.hpp"

using namespace mulord;

int main() {
    std::cout << "orders of 2 modulo small primes:\n";
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull}) {
        u64 ell = order_mod(parse_g("2"), p);
        std::cout << "  p=" << p << "  ell=" << ell << "  index=" << (p - 1) / ell << "\n";
    }

    std::cout << "\ndecompositions g = sign * g0^h:\n";
    for (const char* gs : {"2", "8", "-4", "3/2", "9/4", "-27"}) {
        GDecomposition d = decompose(parse_g(gs));
        std::cout << "  g=" << to_string(d.g) << "  g0=" << to_string(d.g0) << "  h=" << d.h
                  << "  e=" << d.e << "  g1=" << d.g1 << "  delta=" << d.delta << "  n=" << d.n_g
                  << "\n";
    }

    std::cout << "\nKummer degrees D_2(k), the expected index densities:\n";
    GDecomposition d2 = decompose(parse_g("2"));
    for (u64 k = 1; k <= 12; ++k) {
        auto kd = kummer_degree(d2, k);
        std::cout << "  k=" << k << "  D=" << u128_to_string(kd.degree)
                  << "  epsilon=" << epsilon_str(kd.epsilon) << "\n";
    }
    return 0;
}
