#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "mulord/decompose.hpp"
#include "mulord/kummer.hpp"

using namespace mulord;

namespace {

struct DecompRow {
    const char* g;
    int sign;
    u64 h;
    int e;
    u64 g1, delta, n_g;
};

constexpr DecompRow kRows[] = {
    {"2", 1, 1, 0, 2, 8, 8},      {"3", 1, 1, 0, 3, 12, 12},  {"5", 1, 1, 0, 5, 5, 10},
    {"8", 1, 3, 0, 2, 8, 8},      {"12", 1, 1, 0, 3, 12, 12}, {"-2", -1, 1, 0, 2, 8, 8},
    {"-4", -1, 2, 1, 2, 8, 4},    {"3/2", 1, 1, 0, 6, 24, 24}, {"9/4", 1, 2, 1, 6, 24, 24},
};

const char* kNineG[] = {"2", "3", "5", "8", "12", "-2", "-4", "3/2", "9/4"};

}  // namespace

TEST_CASE("decomposition table") {
    for (const auto& r : kRows) {
        GDecomposition d = decompose(parse_g(r.g));
        INFO("g = " << r.g);
        REQUIRE(d.sign == r.sign);
        REQUIRE(d.h == r.h);
        REQUIRE(d.e == r.e);
        REQUIRE(d.g1 == r.g1);
        REQUIRE(d.delta == r.delta);
        REQUIRE(d.n_g == r.n_g);
    }
}

TEST_CASE("decomposition structure over a dense range of g") {
    for (i64 num = -120; num <= 120; ++num) {
        for (i64 den = 1; den <= 40; ++den) {
            if (num == 0 || std::gcd(num < 0 ? -num : num, den) != 1) continue;
            if (den == 1 && (num == 1 || num == -1)) continue;
            RationalG g = make_g(num, den);
            GDecomposition d = decompose(g);

            // round trip: g = sign * g0^h
            RationalG back = reconstruct(d);
            REQUIRE(back.num == g.num);
            REQUIRE(back.den == g.den);

            // g1 positive squarefree; g0 = g1 * g2^2 as rationals
            REQUIRE(d.g1 >= 1);
            for (const auto& f : factorize(d.g1)) REQUIRE(f.e == 1);
            REQUIRE(u128(d.g1) * d.g2_num * d.g2_num * u64(d.g0.den) ==
                    u128(abs_num(d.g0)) * d.g2_den * d.g2_den);

            // discriminant of Q(sqrt(g1))
            REQUIRE((d.delta % 4 == 0 || d.delta % 4 == 1));
            REQUIRE((d.delta == d.g1 || d.delta == 4 * d.g1));

            // h is the full power: g0 is not a proper power
            u64 hh = 0;
            for (const auto& f : factorize(abs_num(d.g0))) hh = std::gcd(hh, u64(f.e));
            for (const auto& f : factorize(u64(d.g0.den))) hh = std::gcd(hh, u64(f.e));
            REQUIRE(hh == 1);
            REQUIRE(d.e == v2(d.h));
            if (d.sign > 0) REQUIRE(d.n_g % d.delta == 0);  // lcm[2^(e+1), delta]
        }
    }
}

TEST_CASE("degree table for g = 2") {
    GDecomposition d = decompose(parse_g("2"));
    const u64 want[] = {0, 1, 2, 6, 8, 20, 12, 42, 16, 54, 40, 110, 48};
    for (u64 k = 1; k <= 12; ++k) {
        REQUIRE(u64(kummer_degree(d, k).degree) == want[k]);
    }
    REQUIRE(kummer_degree(d, 8).epsilon == Epsilon::two);
    REQUIRE(kummer_degree(d, 1).epsilon == Epsilon::one);
}

TEST_CASE("epsilon cases") {
    GDecomposition m4 = decompose(parse_g("-4"));  // h = 2, e = 1, n = 4
    auto d2 = kummer_degree(m4, 2);
    REQUIRE(d2.epsilon == Epsilon::half);  // 2 | 2, 4 does not divide 2
    REQUIRE(u64(d2.degree) == 2);          // phi(2)*2/((2,2) * 1/2)
    auto d4 = kummer_degree(m4, 4);
    REQUIRE(d4.epsilon == Epsilon::two);   // n | 4
    REQUIRE(u64(d4.degree) == 2);          // phi(4)*4/((4,2)*2)

    GDecomposition m2 = decompose(parse_g("-2"));  // e = 0, n = 8
    REQUIRE(kummer_degree(m2, 2).epsilon == Epsilon::one);  // halving needs 2 | k, 2 not | k: vacuous at e = 0
    REQUIRE(kummer_degree(m2, 8).epsilon == Epsilon::two);
    REQUIRE(kummer_degree(m2, 3).epsilon == Epsilon::one);

    // the negative-base halving and doubling cases never collide
    for (const char* gs : {"-2", "-4", "-8", "-9/4", "-27"}) {
        GDecomposition d = decompose(parse_g(gs));
        for (u64 k = 1; k <= 200; ++k) {
            bool doubles = k % d.n_g == 0;
            bool halves = k % 2 == 0 && k % (u64(1) << (d.e + 1)) != 0;
            REQUIRE_FALSE((doubles && halves));
        }
    }
}

TEST_CASE("degree exactness and lower bound for the nine bases") {
    for (const char* gs : kNineG) {
        GDecomposition d = decompose(parse_g(gs));
        REQUIRE(u64(kummer_degree(d, 1).degree) == 1);
        for (u64 k = 1; k <= 1000; ++k) {
            auto kd = kummer_degree(d, k);  // throws if the division is not exact
            u64 phi = multiplicative_basics(k).phi;
            u128 lower_num = u128(phi) * k;
            u128 lower_den = u128(2) * std::gcd(k, d.h);
            REQUIRE(kd.degree * lower_den >= lower_num);
        }
    }
}

TEST_CASE("degree bounds and caps") {
    GDecomposition d = decompose(parse_g("2"));
    REQUIRE_THROWS_AS(kummer_degree(d, 0), domain_error);
    REQUIRE_THROWS_AS(kummer_degree(d, 2'000'000'000ull), domain_error);
    REQUIRE_NOTHROW(kummer_degree(d, 1'000'000'000ull));
}
