#pragma once

// Extended-precision plumbing for the Euler-product constants.
//
// Real is a 50-significant-digit float; BigRat/BigInt are exact. The
// certified tail estimates for sums over primes p > P combine:
//
//   li(P)  via the everywhere-convergent series
//          Ei(y) = gamma + log y + sum_{k>=1} y^k / (k * k!),
//          all terms positive for y > 0, so no cancellation;
//   E1(z)  via the standard continued fraction (modified Lentz);
//   the unconditional bound
//          |pi(t) - li(t)| <= sqrt(t) * log(t) / (8 pi)
//          for 2657 <= t <= 1.4e25 (Buethe, Math. Comp. 85 (2016)),
//          which controls the estimator residual
//          s * integral_P^inf (pi(t) - li(t)) t^(-s-1) dt;
//   exact rational power-series coefficients of -log(1 - u(x)), so a
//   product log-tail becomes a linear combination of prime sums
//          sum_{p>P} p^(-m).

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "mulord/base.hpp"

namespace mulord {

using Real = boost::multiprecision::cpp_bin_float_50;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Stored published literals; computing them is out of scope.
inline const Real& euler_gamma() {
    static const Real g("0.57721566490153286060651209008240243104215933593992359880577");
    return g;
}

inline const Real& real_pi() {
    static const Real p("3.14159265358979323846264338327950288419716939937510582097494");
    return p;
}

inline Real to_real(const BigRat& r) {
    return Real(numerator(r)) / Real(denominator(r));
}

// E1(x) = int_x^inf e^(-t)/t dt for x > 0.
inline Real expint_e1(const Real& x) {
    if (x <= 0) throw domain_error("expint_e1: positive argument required");
    const Real tiny("1e-80"), one(1);
    Real b = x + 1, c = one / tiny, d = one / b, h = d;
    for (int i = 1; i < 100000; ++i) {
        Real a = -Real(i) * i;
        b += 2;
        d = a * d + b;
        if (abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (abs(c) < tiny) c = tiny;
        d = one / d;
        Real del = d * c;
        h *= del;
        if (abs(del - one) < Real("1e-55")) return h * exp(-x);
    }
    throw std::logic_error("expint_e1: continued fraction failed to converge");
}

// Ei(y) for y > 0; li(x) = Ei(log x).
inline Real expint_ei(const Real& y) {
    if (y <= 0) throw domain_error("expint_ei: positive argument required");
    Real term(1), sum(0);
    for (int k = 1; k < 1000000; ++k) {
        term *= y / k;
        Real add = term / k;
        sum += add;
        if (Real(k) > y && add < sum * Real("1e-60")) {
            return euler_gamma() + log(y) + sum;
        }
    }
    throw std::logic_error("expint_ei: series failed to converge");
}

inline Real log_integral(const Real& x) { return expint_ei(log(x)); }

// Upper bound for s * integral_P^inf |pi(t) - li(t)| t^(-s-1) dt with
// the Buethe bound: (s/(8 pi)) * P^(1/2-s) * (log P/(s-1/2) + 1/(s-1/2)^2).
// Requires 2657 <= P <= 1.4e25.
inline Real pi_li_residual_bound(int s, const Real& P, const Real& logP) {
    Real sh = Real(s) - Real(1) / 2;
    return Real(s) / (8 * real_pi()) * pow(P, Real(1) / 2 - s) * (logP / sh + 1 / (sh * sh));
}

// ---- truncated power series over the rationals ----

// c[i] is the coefficient of x^i; the series is truncated at order M
// (exclusive), so c.size() == M.
using RatSeries = std::vector<BigRat>;

inline RatSeries series_mul(const RatSeries& a, const RatSeries& b, size_t M) {
    RatSeries out(M, BigRat(0));
    for (size_t i = 0; i < a.size() && i < M; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < M; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Series of num/den to order M; den[0] must be nonzero.
inline RatSeries series_div(RatSeries num, const RatSeries& den, size_t M) {
    if (den.empty() || den[0] == 0) throw std::logic_error("series_div: den[0] == 0");
    num.resize(std::max(num.size(), M), BigRat(0));
    RatSeries q(M, BigRat(0));
    for (size_t i = 0; i < M; ++i) {
        BigRat acc = num[i];
        for (size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * q[i - j];
        q[i] = acc / den[0];
    }
    return q;
}

// -log(1 - u) = sum_{j>=1} u^j / j for a series u with u[0] == 0.
inline RatSeries series_neglog1m(const RatSeries& u, size_t M) {
    if (!u.empty() && u[0] != 0) throw std::logic_error("series_neglog1m: u(0) != 0");
    RatSeries out(M, BigRat(0));
    RatSeries p(u);
    p.resize(M, BigRat(0));
    for (size_t j = 1; j <= M; ++j) {
        bool all_zero = true;
        for (size_t i = 0; i < M; ++i) {
            if (p[i] != 0) {
                out[i] += p[i] / BigRat(j);
                all_zero = false;
            }
        }
        if (all_zero) break;
        p = series_mul(p, u, M);
    }
    return out;
}

}  // namespace mulord
