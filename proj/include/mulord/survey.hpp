#pragma once

// Sieve-driven empirical order statistics.
//
// Prime scan: one pass over the primes p <= x computes, per block,
//   - sum of ell_g(p) and the prime count,
//   - index densities  #{p : k | i_g(p)}  for k <= k_max,
//   - low-order census #{p : ell_g(p) <= (p-1)/L} for each requested L,
//   - the S_k partition counts (p-1, D) = 2k and the prime-power
//     reciprocal sums E_k = sum_{p in S_k, p^a <= x} p^(-a).
//
// Orders come from the factored p-1: each block sieves the even grid
// p-1 with the base primes, and every extracted prime power q^e feeds
// the standard refinement (divide q out of the order candidate while
// g^(t/q) stays 1). The refinement is valid under interleaving because
// the test at q only depends on the q-adic valuation of the candidate.
// Bad primes (p | numerator * denominator) take ell = 1, i = p - 1.
//
// Integer scan: ell_g(n) = lcm of prime-power orders over n's
// factorization (n coprime to g only), lambda(n) for every n. Prime
// orders are precomputed into a flat table by the prime-scan engine,
// prime-power orders are lifted on the fly.
//
// Both scans run over fixed-width blocks with exact integer
// accumulators; extended-precision E_k values are merged in a fixed
// k-then-block order. Reports are bit-identical for every worker count.

#include <set>

#include "mulord/blocks.hpp"
#include "mulord/factor_sieve.hpp"
#include "mulord/order.hpp"
#include "mulord/precision.hpp"

namespace mulord {

constexpr u64 kPrimeScanMaxX = 10'000'000'000ull;  // keeps sum of orders in u64
constexpr u64 kIntegerScanMaxX = 100'000'000ull;   // order table is x/2 u32 slots
constexpr u64 kSkEkMaxD = 100'000ull;
constexpr u32 kDensityMaxK = 10'000;

struct PrimeScanRequest {
    RationalG g;
    u64 x = 0;
    u32 k_max = 0;        // densities for k = 1..k_max (0 = skip)
    std::vector<u64> Ls;  // census thresholds (empty = skip)
    u64 D = 0;            // S_k/E_k modulus (0 = skip), must be even
};

struct PrimeScanResult {
    u64 x = 0;
    u64 prime_count = 0;
    u64 sum_orders = 0;
    std::vector<u64> density;   // index k, [0..k_max]; density[0] unused
    std::vector<u64> census;    // aligned with request Ls
    std::vector<u64> sk_count;  // index k, [0..D/2]
    std::vector<Real> ek_sum;   // index k, [0..D/2]
};

namespace detail {

struct PrimeBlockStats {
    u64 primes = 0;
    u64 sum_ell = 0;
    std::vector<u64> density;
    std::vector<u64> census;
    std::vector<u64> sk;
    std::vector<Real> ek;
};

// Orders of g modulo every odd prime in [blo, bhi] (blo odd), plus the
// per-prime statistics. If ord_table is nonnull, ell_g(p) is stored at
// ord_table[(p - table_base) >> 1].
template <class Sink>
void prime_block(const PrimeScanRequest& req, const std::vector<u32>& base_primes,
                 const std::set<u64>& bad, u64 blo, u64 bhi, Sink&& sink) {
    const u64 m_lo = blo - 1;  // even grid of p-1 values
    const u64 n_odd = (bhi - blo) / 2 + 1;
    std::vector<char> comp(n_odd, 0);
    for (u32 q : base_primes) {
        if (q == 2) continue;
        u64 qq = u64(q) * q;
        if (qq > bhi) break;
        u64 start = qq;
        if (start < blo) {
            u64 k = (blo + q - 1) / q;
            if (k % 2 == 0) ++k;
            start = k * q;
        }
        for (u64 m = start; m <= bhi; m += 2 * q) comp[(m - blo) / 2] = 1;
    }

    std::vector<u64> rem(n_odd), t(n_odd), a(n_odd);
    const RationalG& g = req.g;
    for (u64 i = 0; i < n_odd; ++i) {
        if (comp[i]) continue;
        u64 p = blo + 2 * i;
        if (bad.count(p)) {
            t[i] = 1;
            rem[i] = 1;
            continue;
        }
        u64 av = g.den == 1 ? abs_num(g) % p : residue_mod(g, p);
        if (g.den == 1 && g.num < 0 && av != 0) av = p - av;
        a[i] = av;
        u64 d = p - 1;
        t[i] = d;
        int e2 = v2(d);
        rem[i] = d >> e2;
        // 2-part of the refinement up front
        for (int j = 0; j < e2; ++j) {
            if (powmod(av, t[i] / 2, p) == 1) {
                t[i] /= 2;
            } else {
                break;
            }
        }
    }

    // odd prime powers of p-1, extracted by sieving the even grid
    for (u32 q : base_primes) {
        if (q == 2) continue;
        if (u64(q) * q > bhi - 1) break;
        u64 start = (m_lo + q - 1) / q * q;
        if (start % 2 == 1) start += q;
        if (start < 2 * u64(q)) start = 2 * u64(q);
        for (u64 m = start; m <= bhi - 1; m += 2 * q) {
            u64 i = (m - m_lo) / 2;
            if (comp[i] || t[i] == 1) continue;  // composite or bad prime
            u64 p = m + 1;
            int e = 0;
            while (rem[i] % q == 0) {
                rem[i] /= q;
                ++e;
            }
            for (int j = 0; j < e; ++j) {
                if (powmod(a[i], t[i] / q, p) == 1) {
                    t[i] /= q;
                } else {
                    break;
                }
            }
        }
    }

    for (u64 i = 0; i < n_odd; ++i) {
        if (comp[i]) continue;
        u64 p = blo + 2 * i;
        if (rem[i] > 1) {  // single prime factor above sqrt
            u64 q = rem[i];
            if (t[i] % q == 0 && powmod(a[i], t[i] / q, p) == 1) t[i] /= q;
        }
        sink(p, t[i]);
    }
}

inline void accumulate_prime(const PrimeScanRequest& req, PrimeBlockStats& s, u64 p, u64 ell) {
    ++s.primes;
    s.sum_ell += ell;
    u64 d = p - 1;
    for (u32 k = 1; k <= req.k_max; ++k) {
        if (d % (u64(k) * ell) == 0) ++s.density[k];
    }
    for (size_t j = 0; j < req.Ls.size(); ++j) {
        if (ell <= d / req.Ls[j]) ++s.census[j];
    }
    if (req.D != 0 && p != 2) {
        u64 gg = std::gcd(d, req.D);  // even: d and D both even
        u64 k = gg / 2;
        ++s.sk[k];
        u64 pa = p;
        for (;;) {
            s.ek[k] += 1 / Real(pa);
            if (pa > req.x / p) break;
            pa *= p;
        }
    }
}

}  // namespace detail

// If ord_table is nonnull it receives ell_g(p) at index p >> 1 for
// every odd prime p <= x (table size (x + 1) / 2, entries for
// non-primes untouched).
inline PrimeScanResult scan_primes_impl(const PrimeScanRequest& req, int workers,
                                        u32* ord_table) {
    if (req.x < 3) throw domain_error("prime scan: x >= 3 required");
    if (req.x > kPrimeScanMaxX) throw domain_error("prime scan: x capped at 1e10");
    if (req.k_max > kDensityMaxK) throw domain_error("index_density: k_max capped at 1e4");
    if (req.D != 0) {
        if (req.D % 2 != 0) throw domain_error("sk_ek: D must be even");
        if (req.D > kSkEkMaxD) throw domain_error("sk_ek: D capped at 1e5");
    }
    for (u64 L : req.Ls) {
        if (L == 0) throw domain_error("census: L >= 1 required");
    }

    u64 root = 1;
    while ((root + 1) * (root + 1) <= req.x) ++root;
    const std::vector<u32> base = primes_up_to(u32(root));
    std::set<u64> bad;
    for (const auto& pe : factorize(abs_num(req.g))) bad.insert(pe.p);
    for (const auto& pe : factorize(u64(req.g.den))) bad.insert(pe.p);

    auto fresh = [&] {
        detail::PrimeBlockStats s;
        s.density.assign(req.k_max + 1, 0);
        s.census.assign(req.Ls.size(), 0);
        if (req.D != 0) {
            s.sk.assign(req.D / 2 + 1, 0);
            s.ek.assign(req.D / 2 + 1, Real(0));
        }
        return s;
    };

    constexpr u64 W = u64(1) << 19;  // fixed width, independent of workers
    auto blocks = run_blocks<detail::PrimeBlockStats>(
        3, req.x, W, workers, [&](Block b) {
            detail::PrimeBlockStats s = fresh();
            detail::prime_block(req, base, bad, b.lo, b.hi, [&](u64 p, u64 ell) {
                detail::accumulate_prime(req, s, p, ell);
                if (ord_table != nullptr) ord_table[p >> 1] = u32(ell);
            });
            return s;
        });

    PrimeScanResult out;
    out.x = req.x;
    out.density.assign(req.k_max + 1, 0);
    out.census.assign(req.Ls.size(), 0);
    if (req.D != 0) {
        out.sk_count.assign(req.D / 2 + 1, 0);
        out.ek_sum.assign(req.D / 2 + 1, Real(0));
    }
    detail::PrimeBlockStats two = fresh();
    detail::accumulate_prime(req, two, 2, 1);  // ell_g(2) = 1 always
    blocks.insert(blocks.begin(), std::move(two));
    for (const auto& s : blocks) {
        out.prime_count += s.primes;
        out.sum_orders += s.sum_ell;
        for (u32 k = 1; k <= req.k_max; ++k) out.density[k] += s.density[k];
        for (size_t j = 0; j < req.Ls.size(); ++j) out.census[j] += s.census[j];
    }
    if (req.D != 0) {
        for (u64 k = 0; k <= req.D / 2; ++k) {  // fixed k-then-block merge order
            for (const auto& s : blocks) {
                out.sk_count[k] += s.sk[k];
                out.ek_sum[k] += s.ek[k];
            }
        }
    }
    return out;
}

inline PrimeScanResult scan_primes(const PrimeScanRequest& req, int workers = 1) {
    return scan_primes_impl(req, workers, nullptr);
}

// ---- integers ----

struct IntegerScanResult {
    u64 x = 0;
    u64 coprime_count = 0;  // n <= x coprime to numerator * denominator
    u64 sum_orders = 0;     // sum of ell_g(n) over those n
    u64 sum_lambda = 0;     // sum of lambda(n) over all n <= x
};

inline IntegerScanResult scan_integers(const RationalG& g, u64 x, int workers = 1) {
    if (x == 0) throw domain_error("integer scan: x >= 1 required");
    if (x > kIntegerScanMaxX) throw domain_error("integer scan: x capped at 1e8");

    // phase 1: orders at all odd primes <= x
    std::vector<u32> ord((x + 1) / 2 + 1, 0);
    if (x >= 3) {
        PrimeScanRequest preq;
        preq.g = g;
        preq.x = x;
        scan_primes_impl(preq, workers, ord.data());
    }

    u64 root = 1;
    while ((root + 1) * (root + 1) <= x) ++root;
    const std::vector<u32> base = primes_up_to(u32(root));
    std::set<u64> bad;
    for (const auto& pe : factorize(abs_num(g))) bad.insert(pe.p);
    for (const auto& pe : factorize(u64(g.den))) bad.insert(pe.p);

    struct BlockOut {
        u64 coprime = 0;
        u64 sum_ell = 0;
        u64 sum_lam = 0;
    };
    constexpr u64 W = u64(1) << 18;
    auto blocks = run_blocks<BlockOut>(1, x, W, workers, [&](Block b) {
        u64 count = b.hi - b.lo + 1;
        std::vector<u64> lam(count, 1), ell(count, 1);
        std::vector<char> isbad(count, 0);
        factored_range(b.lo, count, base, [&](u64 i, u64 q, int e) {
            u64 lam_qe;
            if (q == 2) {
                lam_qe = e == 1 ? 1 : (e == 2 ? 2 : u64(1) << (e - 2));
            } else {
                lam_qe = q - 1;
                for (int j = 1; j < e; ++j) lam_qe *= q;
            }
            lam[i] = lcm_checked(lam[i], lam_qe);
            if (bad.count(q)) {
                isbad[i] = 1;
                return;
            }
            u64 o = q == 2 ? 1 : ord[q >> 1];
            u64 m = q;
            for (int j = 1; j < e; ++j) {  // lift to ell_g(q^e)
                m *= q;
                if (powmod(residue_mod(g, m), o, m) != 1) o *= q;
            }
            ell[i] = lcm_checked(ell[i], o);
        });
        BlockOut o;
        for (u64 i = 0; i < count; ++i) {
            o.sum_lam += lam[i];
            if (!isbad[i]) {
                ++o.coprime;
                o.sum_ell += ell[i];
            }
        }
        return o;
    });

    IntegerScanResult out;
    out.x = x;
    for (const auto& b : blocks) {
        out.coprime_count += b.coprime;
        out.sum_orders += b.sum_ell;
        out.sum_lambda += b.sum_lam;
    }
    return out;
}

// ---- named wrappers matching the operation surface ----

inline PrimeScanResult prime_average(const RationalG& g, u64 x, int workers = 1) {
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    return scan_primes(req, workers);
}

inline std::vector<u64> index_density(const RationalG& g, u64 x, u32 k_max, int workers = 1) {
    if (k_max == 0) throw domain_error("index_density: k_max >= 1 required");
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    req.k_max = k_max;
    return scan_primes(req, workers).density;
}

inline std::vector<u64> low_order_census(const RationalG& g, u64 x, const std::vector<u64>& Ls,
                                         int workers = 1) {
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    req.Ls = Ls;
    return scan_primes(req, workers).census;
}

struct SkEkStats {
    std::vector<u64> sk_count;
    std::vector<Real> ek_sum;
};

inline SkEkStats sk_ek_stats(const RationalG& g, u64 x, u64 D, int workers = 1) {
    if (D == 0) throw domain_error("sk_ek: D >= 2 required");
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    req.D = D;
    PrimeScanResult r = scan_primes(req, workers);
    return {std::move(r.sk_count), std::move(r.ek_sum)};
}

inline IntegerScanResult composite_average(const RationalG& g, u64 x, int workers = 1) {
    return scan_integers(g, x, workers);
}

}  // namespace mulord
