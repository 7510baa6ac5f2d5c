#pragma once

// The Euler-product constants and the two independent routes to c_g.
//
//   B  = e^(-gamma) * prod_p (1 - 1/((p-1)^2 (p+1)))
//   c  =              prod_p (1 - p/(p^3 - 1))
//   C2 =              prod_{q>2} (1 - 1/(q-1)^2)      (twin-prime style base)
//   P_k = (e^(-gamma)/k) * C2 * prod_{q|k, q>2} (q-1)/(q-2)
//
// Products are evaluated over fixed prime blocks (deterministic under
// any worker count) and then tail-corrected: the omitted factors
// satisfy -log prod_{p>P} (1 - u(1/p)) = sum_m a_m sum_{p>P} p^(-m)
// with exact rational a_m, and each prime sum is estimated through
// li/E1 with an unconditional residual bound (see precision.hpp).
// value carries the corrected estimate, tail_bound a certified bound
// on |true - value|. Below the bound's validity floor (P < 2657) the
// value falls back to the raw product with an elementary bound.
//
// c_g route one (closed form): c_g = c * multiplier with
//   multiplier = prod_{p|h} [F(p) / (1 - p/(p^3-1))] * bracket,
//   bracket = 1 + prod_{p|n_g} (1 - F(p, v_p(n_g))/F(p)),
//   and for g < 0, e > 0 an extra -(F(2, e+1) - 1)/(2 F(2)) inside
//   the bracket; everything except c itself in exact rationals.
// Note: one published statement of this closed form carries p^3 + 1
// denominators in two spots; the defining product for c and the
// geometric tail of F both give p^3 - 1, which is what we use
// throughout (the worked 159/160 example only balances with p^3 - 1).
//
// c_g route two (series): sum_k phi(k) rad(k) (-1)^omega(k) / (k^2 D_g(k)),
// truncated at K with the crude certified bound 4 tau(h) / K from
// |term_k| <= 2 (k,h) / k^2 and a divisor-grouping of the tail.

#include <array>
#include <string>

#include "mulord/blocks.hpp"
#include "mulord/factor_sieve.hpp"
#include "mulord/kummer.hpp"
#include "mulord/precision.hpp"

namespace mulord {

struct ConstantValue {
    Real value;           // best estimate (tail-corrected when cutoff >= 2657)
    Real tail_bound;      // certified bound on |true - value|
    u64 cutoff = 0;       // prime cutoff used
    u64 prime_count = 0;  // pi(cutoff)
    Real raw_product;     // plain truncated product, prefactors included
    Real raw_tail_bound;  // certified bound on |true - raw_product|
    bool tail_corrected = false;
};

namespace detail {

enum class ProductKind { B_product, c_constant, C2_constant };

struct TailData {
    std::vector<Real> a;     // coefficients of -log(1 - u(x)), index = power
    Real (*u)(const Real&);  // u(y) itself, for the series remainder
};

inline const TailData& tail_data(ProductKind kind) {
    constexpr size_t M = 25;
    auto build = [](RatSeries num, RatSeries den, Real (*u)(const Real&)) {
        RatSeries a = series_neglog1m(series_div(std::move(num), den, M), M);
        TailData td;
        td.u = u;
        td.a.reserve(M);
        for (const auto& r : a) td.a.push_back(to_real(r));
        return td;
    };
    static const TailData tb = build({0, 0, 0, 1}, {1, -1, -1, 1}, +[](const Real& y) {
        return y * y * y / ((1 - y) * (1 - y) * (1 + y));
    });
    static const TailData tc = build({0, 0, 1}, {1, 0, 0, -1}, +[](const Real& y) {
        return y * y / (1 - y * y * y);
    });
    static const TailData t2 = build({0, 0, 1}, {1, -2, 1}, +[](const Real& y) {
        return y * y / ((1 - y) * (1 - y));
    });
    switch (kind) {
        case ProductKind::B_product: return tb;
        case ProductKind::c_constant: return tc;
        default: return t2;
    }
}

inline Real product_factor(ProductKind kind, u64 p) {
    Real t(p);
    switch (kind) {
        case ProductKind::B_product:
            return 1 - 1 / ((t - 1) * (t - 1) * (t + 1));
        case ProductKind::c_constant:
            return 1 - t / (t * t * t - 1);
        default:  // C2: odd primes only
            return p == 2 ? Real(1) : 1 - 1 / ((t - 1) * (t - 1));
    }
}

inline ConstantValue euler_product(ProductKind kind, u64 cutoff, int workers) {
    if (cutoff < 100) throw domain_error("euler product: cutoff >= 100 required");
    const TailData& td = tail_data(kind);
    const size_t M = td.a.size() - 1;

    struct BlockOut {
        Real prod{1};
        u64 primes = 0;
    };
    auto blocks = run_blocks<BlockOut>(2, cutoff, u64(1) << 22, workers, [&](Block b) {
        BlockOut o;
        for_each_prime(b.lo, b.hi, [&](u64 p) {
            o.prod *= product_factor(kind, p);
            ++o.primes;
        });
        return o;
    });
    Real prod(1);
    u64 primes = 0;
    for (const auto& b : blocks) {
        prod *= b.prod;
        primes += b.primes;
    }

    Real P(cutoff), logP = log(P), y = 1 / P;

    // tail of the coefficient series beyond M, summed over p > P:
    // sum_{m>M} a_m sum_{p>P} p^(-m) <= 2P * (G(1/P) - sum_{m<=M} a_m P^(-m))
    Real Gy = -log(1 - td.u(y));
    Real partial(0), pw = y * y;
    for (size_t m = 2; m <= M; ++m) {
        partial += td.a[m] * pw;
        pw *= y;
    }
    Real series_rem = 2 * P * std::max(Real(0), Real(Gy - partial));

    ConstantValue out;
    out.cutoff = cutoff;
    out.prime_count = primes;
    Real prefac = kind == ProductKind::B_product ? exp(-euler_gamma()) : Real(1);
    out.raw_product = prefac * prod;

    // elementary per-power tails: sum_{p>P} p^(-m) <= P^(1-m)/(m-1)
    Real elem_log(0);
    pw = y;
    for (size_t m = 2; m <= M; ++m) {
        elem_log += td.a[m] * pw / Real(m - 1);
        pw *= y;
    }
    elem_log += series_rem;

    if (cutoff >= 2657) {
        Real liP = log_integral(P);
        Real piP(primes);
        Real tlog(0), elog(0), Ppow = P * P;
        for (size_t m = 2; m <= M; ++m) {
            tlog += td.a[m] * ((liP - piP) / Ppow + expint_e1(Real(m - 1) * logP));
            elog += td.a[m] * pi_li_residual_bound(int(m), P, logP);
            Ppow *= P;
        }
        elog += series_rem + Real("1e-35");
        out.value = out.raw_product * exp(-tlog);
        out.tail_bound = out.value * expm1(elog) + Real("1e-40");
        out.raw_tail_bound = out.raw_product * expm1(tlog + elog) + Real("1e-40");
        out.tail_corrected = true;
    } else {
        out.value = out.raw_product;
        out.raw_tail_bound = out.raw_product * expm1(elem_log) + Real("1e-40");
        out.tail_bound = out.raw_tail_bound;
        out.tail_corrected = false;
    }
    return out;
}

}  // namespace detail

inline ConstantValue euler_product_B(u64 cutoff, int workers = 1) {
    return detail::euler_product(detail::ProductKind::B_product, cutoff, workers);
}
inline ConstantValue euler_product_c(u64 cutoff, int workers = 1) {
    return detail::euler_product(detail::ProductKind::c_constant, cutoff, workers);
}
inline ConstantValue euler_product_C2(u64 cutoff, int workers = 1) {
    return detail::euler_product(detail::ProductKind::C2_constant, cutoff, workers);
}

// ---- the multiplicative helper F ----

// f(p^j) = -p^(1 - 3j + min(j, v_p(h))) for j >= 1, f(1) = 1.
// F_partial(p, t, h) = sum_{j=0}^{t-1} f(p^j), exact.
inline BigRat F_partial(u64 p, u64 t, u64 h) {
    if (t == 0) throw domain_error("F_partial: t >= 1 required");
    int v = valuation(h, p);
    BigRat sum(1);
    for (u64 j = 1; j < t; ++j) {
        i64 ex = 1 - 3 * i64(j) + std::min<i64>(i64(j), v);  // always <= -1
        sum -= BigRat(1, pow(BigInt(p), unsigned(-ex)));
    }
    return sum;
}

// F(p) = lim_t F(p,t) = 1 - sum_{j=1}^{v} p^(1-2j) - p^(1-2v)/(p^3-1),
// v = v_p(h); reduces to 1 - p/(p^3-1) when p does not divide h.
inline BigRat F_full(u64 p, u64 h) {
    int v = valuation(h, p);
    BigInt bp(p);
    BigInt p3m1 = bp * bp * bp - 1;
    BigRat s(1);
    for (int j = 1; j <= v; ++j) s -= BigRat(1, pow(bp, unsigned(2 * j - 1)));
    if (v == 0) {
        s -= BigRat(bp, p3m1);
    } else {
        s -= BigRat(1, pow(bp, unsigned(2 * v - 1)) * p3m1);
    }
    return s;
}

// ---- c_g ----

enum class CgMode { closed_form, series };

struct CgValue {
    RationalG g;
    BigRat multiplier;  // closed form only: c_g = multiplier * c
    Real value;
    Real tail_bound;
    CgMode mode = CgMode::closed_form;
    u64 parameter = 0;  // prime cutoff (closed form) or K (series)
};

// Exact rational r with c_g = r * c.
inline BigRat cg_multiplier(const GDecomposition& d) {
    BigRat r(1);
    for (const auto& [p, e] : factorize(d.h)) {
        BigInt bp(p);
        BigRat base = 1 - BigRat(bp, bp * bp * bp - 1);
        r *= F_full(p, d.h) / base;
    }
    BigRat prod(1);
    for (const auto& [p, e] : factorize(d.n_g)) {
        prod *= 1 - F_partial(p, u64(e), d.h) / F_full(p, d.h);
    }
    BigRat bracket = 1 + prod;
    if (d.sign < 0 && d.e > 0) {
        bracket -= (F_partial(2, u64(d.e) + 1, d.h) - 1) / (2 * F_full(2, d.h));
    }
    return r * bracket;
}

inline CgValue cg_closed_form(const GDecomposition& d, u64 c_cutoff, int workers = 1) {
    CgValue out;
    out.g = d.g;
    out.mode = CgMode::closed_form;
    out.parameter = c_cutoff;
    out.multiplier = cg_multiplier(d);
    ConstantValue c = euler_product_c(c_cutoff, workers);
    Real r = to_real(out.multiplier);
    out.value = r * c.value;
    out.tail_bound = r * c.tail_bound + abs(out.value) * Real("1e-40");
    return out;
}

// Partial sum of sum_k phi(k) rad(k) (-1)^omega(k) / (k^2 D_g(k)).
// Deterministic single-threaded sweep in increasing k.
inline CgValue cg_series(const GDecomposition& d, u64 K) {
    if (K == 0) throw domain_error("cg_series: K >= 1 required");
    if (K > kKummerMaxK) throw domain_error("cg_series: K capped at 1e9");
    CgValue out;
    out.g = d.g;
    out.mode = CgMode::series;
    out.parameter = K;

    u64 root = 1;
    while ((root + 1) * (root + 1) <= K) ++root;
    std::vector<u32> base = primes_up_to(u32(root));

    Real sum(0);
    constexpr u64 W = u64(1) << 18;
    std::vector<u64> phi, rad;
    std::vector<unsigned char> om;
    for (u64 lo = 1; lo <= K; lo += W) {
        u64 count = std::min(W, K - lo + 1);
        phi.assign(count, 1);
        rad.assign(count, 1);
        om.assign(count, 0);
        factored_range(lo, count, base, [&](u64 i, u64 q, int e) {
            u64 qe1 = 1;
            for (int j = 1; j < e; ++j) qe1 *= q;
            phi[i] *= (q - 1) * qe1;
            rad[i] *= q;
            ++om[i];
        });
        for (u64 i = 0; i < count; ++i) {
            u64 k = lo + i;
            u64 deg = kummer_degree_value(d, k, phi[i]);
            Real term = Real(phi[i] * rad[i]) / (Real(k) * Real(k) * Real(deg));
            sum += (om[i] % 2 == 1) ? -term : term;
        }
    }
    out.value = sum;
    out.tail_bound = Real(4 * tau(factorize(d.h))) / Real(K);
    return out;
}

// ---- P_k and the identity sum_k P_k / (2k) = B ----

inline ConstantValue P_k_constant(u64 k, u64 cutoff, int workers = 1) {
    if (k == 0) throw domain_error("P_k: k >= 1 required");
    ConstantValue c2 = euler_product_C2(cutoff, workers);
    BigRat mult(1, BigInt(k));
    for (const auto& qe : factorize(k)) {
        if (qe.p > 2) mult *= BigRat(qe.p - 1, qe.p - 2);
    }
    Real m = to_real(mult) * exp(-euler_gamma());
    ConstantValue out = c2;
    out.value = m * c2.value;
    out.tail_bound = m * c2.tail_bound + abs(out.value) * Real("1e-40");
    out.raw_product = m * c2.raw_product;
    out.raw_tail_bound = m * c2.raw_tail_bound + abs(out.raw_product) * Real("1e-40");
    return out;
}

// sum_{k<=K} P_k/(2k) given the shared base e^(-gamma) * C2; one
// factor sieve sweep, ascending k.
inline Real pk_partial_sum(u64 K, const Real& pk_base) {
    u64 root = 1;
    while ((root + 1) * (root + 1) <= K) ++root;
    std::vector<u32> base = primes_up_to(u32(root));
    Real sum(0);
    constexpr u64 W = u64(1) << 18;
    std::vector<Real> mult;
    for (u64 lo = 1; lo <= K; lo += W) {
        u64 count = std::min(W, K - lo + 1);
        mult.assign(count, Real(1));
        factored_range(lo, count, base, [&](u64 i, u64 q, int e) {
            if (q > 2) mult[i] *= Real(q - 1) / Real(q - 2);
        });
        for (u64 i = 0; i < count; ++i) {
            u64 k = lo + i;
            sum += mult[i] / (Real(k) * Real(k) * 2);
        }
    }
    return pk_base * sum;
}

}  // namespace mulord
