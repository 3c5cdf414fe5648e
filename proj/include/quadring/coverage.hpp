#pragma once

#include "quadring/builder.hpp"
#include "quadring/certificate.hpp"

#include <string>
#include <vector>

namespace quadring {

enum class CoverageFamily { FourM, FourMPlusTwo, S1, S2, S3, S4 };

/// "4m,4k", "4m+2,4k", "S1" .. "S4". Throws std::invalid_argument for anything else.
CoverageFamily coverage_family_from_string(const std::string& text);
std::string to_string(CoverageFamily family);

/// n for grid cell (m, k): (4m, 4k), (4m+2, 4k), 4(12m+5, 6k+3), 4(12m+11, 6k+3), (48m+38, 24k+12), (48m+2, 24k).
RingElement family_member(CoverageFamily family, long m, long k);

struct CoverageRow {
    long m = 0;
    long k = 0;
    std::string pattern;   // residue pattern of n
    RingElement n;
    SupportTag tag = SupportTag::Unknown;
    std::string route;     // provenance of the certificate, or the reason nothing was built
    bool verified = false;
};

struct CoverageOptions {
    std::size_t budget = kDefaultRetryBudget;
    SearchBounds bounds{};
    bool attempt_delegated = true;  // run reduction and search on prior-work cells
};

/// One row per (m, k), ordered by m then k. Cells run concurrently.
std::vector<CoverageRow> coverage(const RingContext& ctx, CoverageFamily family, long m_lo, long m_hi, long k_lo,
                                  long k_hi, const CoverageOptions& options = {});

std::string coverage_csv(const RingContext& ctx, const std::vector<CoverageRow>& rows);
std::string coverage_text(const RingContext& ctx, const std::vector<CoverageRow>& rows);

}  // namespace quadring
