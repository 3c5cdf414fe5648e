#pragma once

#include "quadring/certificate.hpp"
#include "quadring/ring.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadring {

struct VerifyReport {
    std::optional<QuadrupleCertificate> certificate;  // present iff every check passed
    std::array<std::optional<RingElement>, 6> roots;  // canonical roots per pair slot, where they exist
    std::vector<std::size_t> failing_slots;           // pair slots whose product plus n is not a square
    std::string failure;                               // empty, "zero element", "not distinct", or "pair (i,j)"

    bool ok() const { return certificate.has_value(); }
};

/// Direct check of the definition using only ring arithmetic and is_square.
VerifyReport verify_report(const RingContext& ctx, const std::array<RingElement, 4>& elements, const RingElement& n);

std::optional<QuadrupleCertificate> verify_quadruple(const RingContext& ctx, const std::array<RingElement, 4>& elements,
                                                     const RingElement& n);

/// Non-zero elements with |x|, |y| ≤ bound, in canonical order; u ~ v iff u·v + n is a square.
struct PairGraph {
    RingElement n;
    long bound = 0;
    std::vector<RingElement> vertices;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted, symmetric, no self-loops

    std::size_t edge_count() const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    void remove_edge(std::uint32_t u, std::uint32_t v);
    /// Canonical root of vertices[u]·vertices[v] + n (absent when the pair is not an edge).
    std::optional<RingElement> label(const RingContext& ctx, std::uint32_t u, std::uint32_t v) const;
};

/// Throws std::invalid_argument when bound < 1 or the box is too large for machine arithmetic.
PairGraph build_pair_graph(const RingContext& ctx, const RingElement& n, long bound);

/// 4-cliques u < v < w < z in lexicographic order; limit 0 means all.
std::vector<std::array<std::uint32_t, 4>> enumerate_cliques(const PairGraph& graph, std::size_t limit = 0);

/// Every D(n)-quadruple inside the box (up to `limit`, 0 meaning all), elements in canonical order.
std::vector<QuadrupleCertificate> brute_force_search(const RingContext& ctx, const RingElement& n, long bound,
                                                     std::size_t limit = 0);

}  // namespace quadring
