#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eaqmds {

/// A code exactly as printed in the worked examples, kept verbatim so the
/// auditor can diff it against first-principles values.
struct PublishedCode {
    std::string example;
    std::uint64_t q;
    std::int64_t m;
    std::int64_t n, k, d, c;
};

inline const std::vector<PublishedCode>& published_codes() {
    static const std::vector<PublishedCode> table = {
        {"published-q23", 23, 2, 106, 33, 48, 21},
        {"published-q43", 43, 2, 370, 217, 88, 21},
        {"published-q43", 43, 3, 370, 105, 174, 81},
        {"published-q43", 43, 4, 370, 33, 260, 181},
        {"published-q37", 37, 2, 274, 401, 76, 21},
        {"published-q37", 37, 3, 274, 489, 150, 81},
        {"published-q47", 47, 2, 442, 609, 96, 21},
        {"published-q47", 47, 3, 442, 737, 190, 81},
        {"published-q47", 47, 4, 442, 825, 284, 181},
        {"published-q32", 32, 2, 205, 312, 66, 21},
        {"published-q32", 32, 3, 205, 380, 130, 81},
        {"published-q128", 128, 2, 3277, 3768, 258, 21},
        {"published-q128", 128, 3, 3277, 4220, 514, 81},
        {"published-q128", 128, 4, 3277, 4632, 770, 181},
        {"published-q128", 128, 5, 3277, 5004, 1026, 321},
        {"published-q128", 128, 6, 3277, 5336, 1282, 501},
        {"published-q128", 128, 7, 3277, 5628, 1538, 721},
        {"published-q128", 128, 8, 3277, 5880, 1794, 981},
        {"published-q128", 128, 9, 3277, 6092, 2050, 1281},
        {"published-q128", 128, 10, 3277, 6264, 2306, 1621},
        {"published-q128", 128, 11, 3277, 6396, 2562, 2001},
        {"published-q128", 128, 12, 3277, 6488, 2818, 2421},
    };
    return table;
}

inline std::optional<PublishedCode> find_published_code(std::uint64_t q, std::int64_t m) {
    for (const auto& p : published_codes()) {
        if (p.q == q && p.m == m) return p;
    }
    return std::nullopt;
}

/// A Z1 index window printed differently from the general construction.
/// window_index follows the construction's order: i1, i2, i3, j1, j2.
struct PublishedWindow {
    std::string example;
    std::uint64_t q;
    std::int64_t m;
    std::size_t window_index;
    std::int64_t lo, hi;
};

inline const std::vector<PublishedWindow>& published_window_deviations() {
    static const std::vector<PublishedWindow> table = {
        {"published-q37", 37, 3, 3, 10, 13},
        {"published-q32", 32, 3, 3, 7, 10},
        {"published-q128", 128, 3, 3, 28, 51},
    };
    return table;
}

}  // namespace eaqmds
