#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "mulord/survey.hpp"

using namespace mulord;

namespace {

// straight per-prime evaluation through order_mod, no sieving
PrimeScanResult brute_prime_scan(const PrimeScanRequest& req) {
    PrimeScanResult out;
    out.x = req.x;
    out.density.assign(req.k_max + 1, 0);
    out.census.assign(req.Ls.size(), 0);
    if (req.D) {
        out.sk_count.assign(req.D / 2 + 1, 0);
        out.ek_sum.assign(req.D / 2 + 1, Real(0));
    }
    for (u64 p = 2; p <= req.x; ++p) {
        if (!is_prime(p)) continue;
        ++out.prime_count;
        u64 ell = order_mod(req.g, p);
        out.sum_orders += ell;
        for (u32 k = 1; k <= req.k_max; ++k) {
            if ((p - 1) % (k * ell) == 0) ++out.density[k];
        }
        for (size_t j = 0; j < req.Ls.size(); ++j) {
            if (ell * req.Ls[j] <= p - 1) ++out.census[j];
        }
        if (req.D && p != 2) {
            u64 k = std::gcd(p - 1, req.D) / 2;
            ++out.sk_count[k];
            for (u64 pa = p;; pa *= p) {
                out.ek_sum[k] += 1 / Real(pa);
                if (pa > req.x / p) break;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("prime scan examples") {
    auto r = prime_average(parse_g("2"), 20);
    REQUIRE(r.prime_count == 8);
    REQUIRE(r.sum_orders == 58);

    auto r3 = prime_average(parse_g("2"), 3);
    REQUIRE(r3.prime_count == 2);
    REQUIRE(r3.sum_orders == 3);  // ell(2) = 1, ell(3) = 2

    REQUIRE_THROWS_AS(prime_average(parse_g("2"), 2), domain_error);
}

TEST_CASE("prime scan matches the brute force on every statistic") {
    for (const char* gs : {"2", "3/2", "-4", "-10"}) {
        PrimeScanRequest req;
        req.g = parse_g(gs);
        req.x = 1200;
        req.k_max = 6;
        req.Ls = {1, 2, 3, 8};
        req.D = 12;
        auto want = brute_prime_scan(req);
        auto got = scan_primes(req, 2);
        INFO("g = " << gs);
        REQUIRE(got.prime_count == want.prime_count);
        REQUIRE(got.sum_orders == want.sum_orders);
        REQUIRE(got.density == want.density);
        REQUIRE(got.census == want.census);
        REQUIRE(got.sk_count == want.sk_count);
        REQUIRE(got.ek_sum.size() == want.ek_sum.size());
        for (size_t k = 0; k < want.ek_sum.size(); ++k) {
            REQUIRE(abs(got.ek_sum[k] - want.ek_sum[k]) < Real("1e-45"));
        }
    }
}

TEST_CASE("census invariants") {
    RationalG g = parse_g("2");
    auto counts = low_order_census(g, 100000, {1, 2, 4, 8, 16});
    REQUIRE(counts[0] == prime_count(100000));  // L = 1 admits every prime
    for (size_t j = 1; j < counts.size(); ++j) REQUIRE(counts[j] <= counts[j - 1]);

    // independent check of L = 2 through the generic order path
    u64 want = 0;
    for_each_prime(2, 100000, [&](u64 p) {
        if (order_mod(g, p) * 2 <= p - 1) ++want;
    });
    REQUIRE(counts[1] == want);
}

TEST_CASE("density invariants") {
    auto d = index_density(parse_g("2"), 50000, 4);
    REQUIRE(d[1] == prime_count(50000));  // k = 1 counts every prime, bad ones included
    for (u32 k = 2; k <= 4; ++k) REQUIRE(d[k] < d[1]);
}

TEST_CASE("sk partition") {
    RationalG g = parse_g("2");
    u64 x = 100000, D = 24;
    auto stats = sk_ek_stats(g, x, D);
    u64 total = 0;
    for (u64 k = 0; k <= D / 2; ++k) {
        if (stats.sk_count[k]) REQUIRE((2 * k >= 2 && D % (2 * k) == 0));
        total += stats.sk_count[k];
        if (stats.sk_count[k] == 0) REQUIRE(stats.ek_sum[k] == Real(0));
    }
    REQUIRE(total == prime_count(x) - 1);  // p = 2 excluded, everything else lands once

    REQUIRE_THROWS_AS(sk_ek_stats(g, x, 7), domain_error);
}

TEST_CASE("integer scan examples and brute force") {
    auto r = composite_average(parse_g("2"), 10);
    REQUIRE(r.coprime_count == 5);
    REQUIRE(r.sum_orders == 16);  // 1 + 2 + 4 + 3 + 6

    auto r1 = composite_average(parse_g("2"), 1);
    REQUIRE(r1.coprime_count == 1);
    REQUIRE(r1.sum_orders == 1);
    REQUIRE(r1.sum_lambda == 1);

    for (const char* gs : {"2", "3/2", "-5"}) {
        RationalG g = parse_g(gs);
        u64 x = 2000;
        u64 sum_ell = 0, coprime = 0, sum_lam = 0;
        for (u64 n = 1; n <= x; ++n) {
            sum_lam += multiplicative_basics(n).lambda;
            if (std::gcd(abs_num(g), n) == 1 && std::gcd(u64(g.den), n) == 1) {
                ++coprime;
                sum_ell += order_mod(g, n);
            }
        }
        auto got = scan_integers(g, x, 2);
        INFO("g = " << gs);
        REQUIRE(got.coprime_count == coprime);
        REQUIRE(got.sum_orders == sum_ell);
        REQUIRE(got.sum_lambda == sum_lam);
    }
}

TEST_CASE("worker count does not change any result") {
    PrimeScanRequest req;
    req.g = parse_g("3/2");
    req.x = 200000;
    req.k_max = 8;
    req.Ls = {1, 2, 4};
    req.D = 24;
    auto one = scan_primes(req, 1);
    for (int w : {3, 8}) {
        auto many = scan_primes(req, w);
        REQUIRE(many.prime_count == one.prime_count);
        REQUIRE(many.sum_orders == one.sum_orders);
        REQUIRE(many.density == one.density);
        REQUIRE(many.census == one.census);
        REQUIRE(many.sk_count == one.sk_count);
        for (size_t k = 0; k < one.ek_sum.size(); ++k) {
            REQUIRE(many.ek_sum[k] == one.ek_sum[k]);  // bitwise, not approximate
        }
    }

    auto i1 = scan_integers(parse_g("2"), 100000, 1);
    auto i4 = scan_integers(parse_g("2"), 100000, 4);
    REQUIRE(i1.coprime_count == i4.coprime_count);
    REQUIRE(i1.sum_orders == i4.sum_orders);
    REQUIRE(i1.sum_lambda == i4.sum_lambda);
}

TEST_CASE("scan domain checks") {
    REQUIRE_THROWS_AS(scan_integers(parse_g("2"), 0), domain_error);
    PrimeScanRequest req;
    req.g = parse_g("2");
    req.x = 1000;
    req.D = 200002;
    REQUIRE_THROWS_AS(scan_primes(req), domain_error);
    req.D = 0;
    req.k_max = 20001;
    REQUIRE_THROWS_AS(scan_primes(req), domain_error);
}
