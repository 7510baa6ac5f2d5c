#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "mulord/order.hpp"

using namespace mulord;

namespace {

// repeated multiplication, no shortcuts
u64 brute_order(const RationalG& g, u64 n) {
    u64 a = residue_mod(g, n);
    u64 v = a;
    u64 t = 1;
    while (v != 1 % n) {
        v = mulmod(v, a, n);
        ++t;
        REQUIRE(t <= n);  // must terminate within the group order
    }
    return t;
}

bool valid_modulus(const RationalG& g, u64 n) {
    if (n == 0) return false;
    if (std::gcd(abs_num(g), n) == 1 && std::gcd(u64(g.den), n) == 1) return true;
    return is_prime(n);  // bad primes take the convention value
}

}  // namespace

TEST_CASE("parse_g") {
    REQUIRE(parse_g("2").num == 2);
    REQUIRE(parse_g("2").den == 1);
    REQUIRE(parse_g("-2").num == -2);
    REQUIRE(parse_g("3/2").num == 3);
    REQUIRE(parse_g("3/2").den == 2);
    REQUIRE(parse_g("4/6").num == 2);   // reduced
    REQUIRE(parse_g("4/6").den == 3);
    REQUIRE(parse_g("-9/4").num == -9);
    REQUIRE(to_string(parse_g("-9/4")) == "-9/4");
    REQUIRE(to_string(parse_g("7")) == "7");

    REQUIRE_THROWS_AS(parse_g("0"), domain_error);
    REQUIRE_THROWS_AS(parse_g("1"), domain_error);
    REQUIRE_THROWS_AS(parse_g("-1"), domain_error);
    REQUIRE_THROWS_AS(parse_g("2/2"), domain_error);
    REQUIRE_THROWS_AS(parse_g("2/0"), domain_error);
    REQUIRE_THROWS_AS(parse_g("abc"), domain_error);
    REQUIRE_THROWS_AS(parse_g("2/"), domain_error);
    REQUIRE_THROWS_AS(parse_g(""), domain_error);
    REQUIRE_THROWS_AS(parse_g("1/2x"), domain_error);
}

TEST_CASE("residues") {
    REQUIRE(residue_mod(parse_g("3/2"), 5) == 4);   // 3 * inv(2) = 3 * 3 = 9 = 4
    REQUIRE(residue_mod(parse_g("-2"), 7) == 5);
    REQUIRE(residue_mod(parse_g("9/4"), 7) == 4);   // 9 * inv(4) = 2 * 2
    REQUIRE(residue_mod(parse_g("2"), 1) == 0);
}

TEST_CASE("order_mod on knowns") {
    REQUIRE(order_mod(parse_g("2"), 7) == 3);
    REQUIRE(order_mod(parse_g("2"), 15) == 4);
    REQUIRE(order_mod(parse_g("3/2"), 5) == 2);
    REQUIRE(order_mod(parse_g("2"), 1) == 1);
    REQUIRE(order_mod(parse_g("2"), 3) == 2);
    REQUIRE(order_mod(parse_g("10"), 7) == 6);

    // bad primes take ell = 1
    REQUIRE(order_mod(parse_g("2"), 2) == 1);
    REQUIRE(order_mod(parse_g("3/2"), 2) == 1);
    REQUIRE(order_mod(parse_g("3/2"), 3) == 1);
    REQUIRE(order_mod(parse_g("-10"), 5) == 1);

    // composite modulus sharing a factor is out of domain
    REQUIRE_THROWS_AS(order_mod(parse_g("2"), 6), domain_error);
    REQUIRE_THROWS_AS(order_mod(parse_g("3/2"), 9), domain_error);
    REQUIRE_THROWS_AS(order_mod(parse_g("2"), 0), domain_error);
}

TEST_CASE("order_mod equals brute force for small moduli") {
    for (const char* gs : {"2", "3", "5", "-2", "3/2", "-9/4", "10", "-6"}) {
        RationalG g = parse_g(gs);
        for (u64 n = 1; n <= 500; ++n) {
            if (!valid_modulus(g, n)) {
                if (n > 0) REQUIRE_THROWS_AS(order_mod(g, n), domain_error);
                continue;
            }
            u64 got = order_mod(g, n);
            if (std::gcd(abs_num(g) * u64(g.den) % std::max<u64>(n, 1), n) != 1 && n > 1) {
                REQUIRE(got == 1);  // bad prime convention
            } else if (n == 1) {
                REQUIRE(got == 1);
            } else {
                REQUIRE(got == brute_order(g, n));
            }
        }
    }
}

TEST_CASE("order divides lambda") {
    for (const char* gs : {"2", "3/2"}) {
        RationalG g = parse_g(gs);
        for (u64 n = 1; n <= 20000; ++n) {
            if (std::gcd(abs_num(g), n) != 1 || std::gcd(u64(g.den), n) != 1) continue;
            u64 ell = order_mod(g, n);
            u64 lam = multiplicative_basics(n).lambda;
            REQUIRE(lam % ell == 0);
        }
    }
}

TEST_CASE("order_from_multiple") {
    // reduction from any multiple of the order recovers the order
    RationalG g = parse_g("3");
    for (u64 p : {7ull, 41ull, 101ull, 65537ull}) {
        u64 a = residue_mod(g, p);
        u64 t = p - 1;
        u64 ord = order_from_multiple(a, p, t, factorize(t));
        REQUIRE(ord == brute_order(g, p));
        REQUIRE(powmod(a, ord, p) == 1);
        for (const auto& f : factorize(ord)) {
            REQUIRE(powmod(a, ord / f.p, p) != 1);
        }
    }
}

TEST_CASE("index at primes") {
    REQUIRE(index_mod_prime(parse_g("2"), 7) == 2);    // (7-1)/3
    REQUIRE(index_mod_prime(parse_g("2"), 2) == 1);    // bad prime: (2-1)/1
    REQUIRE(index_mod_prime(parse_g("-10"), 5) == 4);  // bad prime: (5-1)/1
    REQUIRE_THROWS_AS(index_mod_prime(parse_g("2"), 15), domain_error);
}
