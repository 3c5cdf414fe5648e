#pragma once

#include "quadring/ring.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace quadring {

/// Index pairs (i, j), i < j, in witness order: 12, 13, 14, 23, 24, 34.
inline constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// "12", "13", ... for witness slot `slot`.
std::string pair_key(std::size_t slot);

struct Provenance {
    std::string tag;                        // "thm12.caseI", "ex3", "search", "scaled", ...
    std::map<std::string, Integer> params;  // named parameters (m, k, a1, b1, M, N, t, ...)
    std::string detail;                     // free-form: the source of a scaled certificate, a family label

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Four elements plus the six square roots witnessing every pairwise condition.
/// For an assembly {a, b, a+b+2r, a+4b+4r} the witnesses are
/// r, a+r, α, b+r, 2b+r, a+2b+3r.
struct QuadrupleCertificate {
    Integer d;
    RingElement n;
    std::array<RingElement, 4> elements;
    std::array<RingElement, 6> witnesses;
    Provenance provenance;

    friend bool operator==(const QuadrupleCertificate&, const QuadrupleCertificate&) = default;
};

/// Structural check: non-zero, pairwise distinct, and witness² == product + n for all six pairs.
bool certificate_holds(const RingContext& ctx, const QuadrupleCertificate& cert);

enum class SupportTag { ConstructibleHere, DelegatedPriorWork, ExcludedS, OpenS0, ExcludedResidue, Unknown };

std::string to_string(SupportTag tag);
SupportTag support_tag_from_string(const std::string& text);

struct SupportStatus {
    SupportTag tag = SupportTag::Unknown;
    std::string detail;

    friend bool operator==(const SupportStatus&, const SupportStatus&) = default;
};

}  // namespace quadring
