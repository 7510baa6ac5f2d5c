#pragma once

// Report serialization: versioned JSON envelope with an embedded
// checksum, CSV for tabular results, and decimal formatting that
// prints only digits certified by a tail bound.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mulord/precision.hpp"

namespace mulord {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

// FNV-1a, 64-bit.
inline u64 fnv1a64(const std::string& s) {
    u64 h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(u64 v) {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << v;
    return os.str();
}

// Significant-digit rendering for wide floats (default format, not fixed).
inline std::string real_str(const Real& v, int digits = 25) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

// Two-to-three digit rendering for error bounds.
inline std::string bound_str(const Real& v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

// Largest d such that value rounded to d decimals is a correct rounding
// of everything in [value - bound, value + bound]; returns that rounding
// with exactly d decimals. Every printed digit is certified.
inline std::string certified_decimal(const Real& value, const Real& bound, int max_digits = 40) {
    int best = 0;
    Real best_rounded = floor(value + Real(0.5));
    Real p10(1);
    for (int d = 0; d <= max_digits; ++d) {
        Real rounded = floor(value * p10 + Real(0.5)) / p10;
        if (abs(rounded - value) + bound <= Real(0.5) / p10) {
            best = d;
            best_rounded = rounded;
        }
        p10 *= 10;
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(best) << best_rounded;
    return os.str();
}

struct Report {
    json doc;

    explicit Report(const std::string& op) {
        doc["schema"] = std::string("mulord/") + op + "/1";
        doc["version"] = kVersion;
        doc["op"] = op;
        doc["params"] = json::object();
        doc["results"] = json::object();
    }

    json& params() { return doc["params"]; }
    json& results() { return doc["results"]; }

    // Checksum covers the serialized document minus the checksum field.
    void seal() {
        doc.erase("checksum");
        doc["checksum"] = hex64(fnv1a64(doc.dump()));
    }

    std::string to_json() const { return doc.dump(2) + "\n"; }
};

// Re-derives the checksum of a parsed report; round-trip validation.
inline bool checksum_ok(json doc) {
    if (!doc.contains("checksum")) return false;
    std::string want = doc["checksum"];
    doc.erase("checksum");
    return hex64(fnv1a64(doc.dump())) == want;
}

// CSV with "# key=value" parameter comments, a header row, and no
// locale formatting.
struct Csv {
    std::ostringstream out;

    void comment(const std::string& key, const std::string& value) {
        out << "# " << key << "=" << value << "\n";
    }

    void row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ",";
            out << cells[i];
        }
        out << "\n";
    }

    std::string str() const { return out.str(); }
};

}  // namespace mulord
