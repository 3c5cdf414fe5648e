#pragma once

#include "quadring/builder.hpp"

#include <array>
#include <string>
#include <vector>

namespace quadring::testing {

// Frozen after independent re-derivation of every pair condition.
struct Golden {
    std::string name;
    RingElement n;
    std::string method;  // "auto", "ex3", "ex4"
    unsigned long t;
    std::array<RingElement, 4> elements;
    std::array<RingElement, 6> witnesses;
};

inline const std::vector<Golden>& goldens() {
    static const std::vector<Golden> table{
        {"n=8", {8, 0}, "auto", 0,
         {{{19, 6}, {-31, 12}, {-26, 12}, {-133, 42}}},
         {{{-7, -3}, {12, 3}, {1, 0}, {-38, 9}, {-69, 21}, {-64, 21}}}},
        {"n=10", {10, 0}, "auto", 0,
         {{{4, 0}, {4, 2}, {16, 4}, {36, 12}}},
         {{{4, 1}, {8, 1}, {-8, -3}, {8, 3}, {12, 5}, {24, 7}}}},
        {"n=-12", {-12, 0}, "auto", 0,
         {{{2, 0}, {56, 0}, {38, 0}, {186, 0}}},
         {{{-10, 0}, {-8, 0}, {0, 6}, {46, 0}, {102, 0}, {84, 0}}}},
        {"n=116+12*sqrt(10), t=1", {116, 12}, "ex3", 1,
         {{{60, 19}, {-216, 77}, {-108, 118}, {-708, 371}}},
         {{{24, 11}, {84, 30}, {-126, -35}, {-192, 88}, {-408, 165}, {-300, 206}}}},
        {"n=86+12*sqrt(10), t=0", {86, 12}, "ex4", 0,
         {{{10, 3}, {1750, -555}, {1808, -564}, {7106, -2241}}},
         {{{24, -6}, {34, -3}, {-54, 10}, {1774, -561}, {3524, -1116}, {3582, -1125}}}},
    };
    return table;
}

inline QuadrupleCertificate build_golden(const RingContext& ctx, const Golden& g) {
    if (g.method == "auto") return construct_auto(ctx, g.n);
    return construct_d10(ctx, g.n, g.t);
}

}  // namespace quadring::testing
