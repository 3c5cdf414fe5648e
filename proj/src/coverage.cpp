#include "quadring/coverage.hpp"

#include "quadring/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace quadring {

CoverageFamily coverage_family_from_string(const std::string& text) {
    for (CoverageFamily f : {CoverageFamily::FourM, CoverageFamily::FourMPlusTwo, CoverageFamily::S1,
                             CoverageFamily::S2, CoverageFamily::S3, CoverageFamily::S4}) {
        if (to_string(f) == text) return f;
    }
    throw std::invalid_argument("unknown family '" + text + "' (expected 4m,4k | 4m+2,4k | S1 | S2 | S3 | S4)");
}

std::string to_string(CoverageFamily family) {
    switch (family) {
        case CoverageFamily::FourM: return "4m,4k";
        case CoverageFamily::FourMPlusTwo: return "4m+2,4k";
        case CoverageFamily::S1: return "S1";
        case CoverageFamily::S2: return "S2";
        case CoverageFamily::S3: return "S3";
        case CoverageFamily::S4: return "S4";
    }
    return "?";
}

RingElement family_member(CoverageFamily family, long m, long k) {
    switch (family) {
        case CoverageFamily::FourM: return {4 * m, 4 * k};
        case CoverageFamily::FourMPlusTwo: return {4 * m + 2, 4 * k};
        case CoverageFamily::S1: return {48 * m + 20, 24 * k + 12};
        case CoverageFamily::S2: return {48 * m + 44, 24 * k + 12};
        case CoverageFamily::S3: return {48 * m + 38, 24 * k + 12};
        case CoverageFamily::S4: return {48 * m + 2, 24 * k};
    }
    throw std::invalid_argument("unknown family");
}

namespace {

std::string cell_pattern(CoverageFamily family, long m, long k) {
    long mm = 5, km = 5;
    if (family == CoverageFamily::FourM) mm = km = 6;
    if (family == CoverageFamily::FourMPlusTwo) {
        mm = 12;
        km = 6;
    }
    auto md = [](long v, long q) { return ((v % q) + q) % q; };
    std::ostringstream out;
    out << "(m,k)=(" << md(m, mm) << "," << md(k, km) << ") mod (" << mm << "," << km << ")";
    return out.str();
}

CoverageRow run_cell(const RingContext& ctx, CoverageFamily family, long m, long k, const CoverageOptions& options) {
    CoverageRow row;
    row.m = m;
    row.k = k;
    row.pattern = cell_pattern(family, m, k);
    row.n = family_member(family, m, k);
    if (row.n.is_zero()) {
        row.route = "n = 0";
        return row;
    }

    SupportStatus status = classify_support(ctx, row.n);
    const bool exceptional_family = family != CoverageFamily::FourM && family != CoverageFamily::FourMPlusTwo;
    if (exceptional_family) {
        if (auto ex = classify_exceptional(ctx, row.n)) status = *ex;
    }
    row.tag = status.tag;

    const bool attempt = status.tag == SupportTag::ConstructibleHere ||
                         (status.tag == SupportTag::DelegatedPriorWork && options.attempt_delegated);
    if (!attempt) {
        row.route = status.detail;
        return row;
    }
    try {
        const QuadrupleCertificate cert = construct_auto(ctx, row.n, options.budget, options.bounds);
        row.verified = verify_quadruple(ctx, cert.elements, row.n).has_value() && certificate_holds(ctx, cert);
        row.route = cert.provenance.tag;
        if (!cert.provenance.detail.empty()) row.route += " (" + cert.provenance.detail + ")";
    } catch (const std::exception& e) {
        row.route = e.what();
    }
    return row;
}

}  // namespace

std::vector<CoverageRow> coverage(const RingContext& ctx, CoverageFamily family, long m_lo, long m_hi, long k_lo,
                                  long k_hi, const CoverageOptions& options) {
    std::vector<std::pair<long, long>> cells;
    for (long m = m_lo; m <= m_hi; ++m) {
        for (long k = k_lo; k <= k_hi; ++k) cells.emplace_back(m, k);
    }
    std::vector<CoverageRow> rows(cells.size());
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = std::max(1u, std::min<unsigned>(hw == 0 ? 1 : hw, static_cast<unsigned>(cells.size())));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < cells.size(); i += workers) {
            rows[i] = run_cell(ctx, family, cells[i].first, cells[i].second, options);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    if (!cells.empty()) work(0);
    for (auto& t : pool) t.join();
    return rows;
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string coverage_csv(const RingContext& ctx, const std::vector<CoverageRow>& rows) {
    std::ostringstream out;
    out << "d,m,k,pattern,n_x,n_y,status,route,verified\n";
    for (const auto& r : rows) {
        out << ctx.d().get_str() << ',' << r.m << ',' << r.k << ',' << csv_field(r.pattern) << ','
            << r.n.x.get_str() << ',' << r.n.y.get_str() << ',' << to_string(r.tag) << ',' << csv_field(r.route)
            << ',' << (r.verified ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string coverage_text(const RingContext& ctx, const std::vector<CoverageRow>& rows) {
    std::vector<std::array<std::string, 7>> cells;
    cells.push_back({"m", "k", "pattern", "n", "status", "verified", "route"});
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.m), std::to_string(r.k), r.pattern, ctx.format(r.n), to_string(r.tag),
                         r.verified ? "yes" : "no", r.route});
    }
    std::array<std::size_t, 7> width{};
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 7; ++c) width[c] = std::max(width[c], line[c].size());
    }
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 7; ++c) {
            out << line[c];
            if (c + 1 < 7) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace quadring
