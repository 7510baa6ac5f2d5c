#pragma once

// Shared integer typedefs and the error taxonomy.
//
// domain_error: the input is outside what the mathematics defines
//   (g = 0 or +-1, composite modulus sharing a factor with g, ...).
//   The CLI maps it to exit code 1.
// logic errors (broken internal invariants, e.g. an inexact division
//   that should be exact) throw std::logic_error and are bugs.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mulord {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

}  // namespace mulord
