#pragma once

// The rational base g = a/b: reduced, b >= 1, and g not in {0, +1, -1}
// (the order statistics are degenerate or undefined there).

#include <numeric>
#include <string>
#include <string_view>

#include "mulord/modmath.hpp"

namespace mulord {

struct RationalG {
    i64 num = 0;  // signed, nonzero
    i64 den = 1;  // positive, coprime to num

    friend bool operator==(const RationalG&, const RationalG&) = default;
};

inline RationalG make_g(i64 num, i64 den) {
    if (den == 0) throw domain_error("g: zero denominator");
    if (num == 0) throw domain_error("g = 0 is not a valid base");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 d = std::gcd(num < 0 ? -num : num, den);
    num /= d;
    den /= d;
    if (den == 1 && (num == 1 || num == -1)) throw domain_error("g = +-1 is not a valid base");
    return RationalG{num, den};
}

// Accepts "a" or "a/b".
inline RationalG parse_g(std::string_view s) {
    auto bad = [&] { return domain_error("g: cannot parse '" + std::string(s) + "'"); };
    size_t slash = s.find('/');
    std::string ns(s.substr(0, slash == std::string_view::npos ? s.size() : slash));
    std::string ds(slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1)));
    if (ns.empty() || ds.empty()) throw bad();
    size_t pos = 0;
    i64 num, den;
    try {
        num = std::stoll(ns, &pos);
        if (pos != ns.size()) throw bad();
        den = std::stoll(ds, &pos);
        if (pos != ds.size()) throw bad();
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
    return make_g(num, den);
}

inline std::string to_string(const RationalG& g) {
    std::string s = std::to_string(g.num);
    if (g.den != 1) s += "/" + std::to_string(g.den);
    return s;
}

inline u64 abs_num(const RationalG& g) { return g.num < 0 ? u64(-(g.num + 1)) + 1 : u64(g.num); }

// True when n shares a prime factor with numerator or denominator.
inline bool shares_factor(const RationalG& g, u64 n) {
    return std::gcd(abs_num(g), n) > 1 || std::gcd(u64(g.den), n) > 1;
}

// g reduced mod n; requires gcd(num * den, n) = 1.
inline u64 residue_mod(const RationalG& g, u64 n) {
    if (n == 1) return 0;
    u64 a = abs_num(g) % n;
    if (g.num < 0 && a != 0) a = n - a;
    u64 b = u64(g.den) % n;
    return mulmod(a, invmod(b, n), n);
}

}  // namespace mulord
