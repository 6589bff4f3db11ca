#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include <hilex/error.hpp>

namespace hilex {

// Enumeration caps. Every brute-force routine checks the relevant field
// before touching a factorial-sized set.
struct Limits {
    int max_perm_n = 8;                        // S_n element scans
    int max_char_weight = 7;                   // general S_n generating-function LHS
    std::uint64_t max_centralizer = 40320;     // |Z_x| for centralizer enumeration
    int max_bn_enum_n = 6;                     // B_n element scans
    int max_bn_char_n = 5;                     // B_n higher Lie characters

    static Limits unlimited()
    {
        Limits l;
        l.max_perm_n = 12;
        l.max_char_weight = 12;
        l.max_centralizer = UINT64_C(1) << 40;
        l.max_bn_enum_n = 9;
        l.max_bn_char_n = 9;
        return l;
    }

    // Reads HILEX_MAX_N. Without `allow_raise` the variable may only lower the
    // S_n caps; raising them requires the explicit override.
    static Limits from_environment(bool allow_raise)
    {
        Limits l = allow_raise ? unlimited() : Limits{};
        const char *raw = std::getenv("HILEX_MAX_N");
        if (raw == nullptr || *raw == '\0') {
            return l;
        }
        char *end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (end == raw || *end != '\0' || v < 0 || v > 20) {
            throw std::invalid_argument("HILEX_MAX_N must be an integer in [0, 20]");
        }
        int cap = static_cast<int>(v);
        if (!allow_raise && cap > l.max_perm_n) {
            throw size_error("HILEX_MAX_N=" + std::string(raw) + " exceeds the default cap; pass --unsafe-large");
        }
        l.max_perm_n = cap;
        if (!allow_raise) {
            l.max_char_weight = std::min(l.max_char_weight, cap);
        } else {
            l.max_char_weight = cap;
        }
        return l;
    }
};

// Per-run settings threaded through the verifiers. Results never depend on
// `jobs`; it only controls how many worker threads split a scan.
struct Context {
    Limits limits{};
    unsigned jobs = 1;
};

inline void require_cap(const char *what, long long value, long long cap)
{
    if (value > cap) {
        throw size_error(std::string(what) + ": " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
    }
}

} // namespace hilex
