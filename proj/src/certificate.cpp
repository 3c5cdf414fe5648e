#include "quadring/certificate.hpp"

#include <stdexcept>

namespace quadring {

std::string pair_key(std::size_t slot) {
    const auto [i, j] = kPairs.at(slot);
    return std::to_string(i + 1) + std::to_string(j + 1);
}

bool certificate_holds(const RingContext& ctx, const QuadrupleCertificate& cert) {
    if (ctx.d() != cert.d) return false;
    for (std::size_t i = 0; i < 4; ++i) {
        if (cert.elements[i].is_zero()) return false;
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (cert.elements[i] == cert.elements[j]) return false;
        }
    }
    for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
        const auto [i, j] = kPairs[slot];
        const RingElement target = ctx.mul(cert.elements[i], cert.elements[j]) + cert.n;
        if (ctx.square(cert.witnesses[slot]) != target) return false;
    }
    return true;
}

std::string to_string(SupportTag tag) {
    switch (tag) {
        case SupportTag::ConstructibleHere: return "ConstructibleHere";
        case SupportTag::DelegatedPriorWork: return "DelegatedPriorWork";
        case SupportTag::ExcludedS: return "ExcludedS";
        case SupportTag::OpenS0: return "OpenS0";
        case SupportTag::ExcludedResidue: return "ExcludedResidue";
        case SupportTag::Unknown: return "Unknown";
    }
    return "Unknown";
}

SupportTag support_tag_from_string(const std::string& text) {
    for (SupportTag t : {SupportTag::ConstructibleHere, SupportTag::DelegatedPriorWork, SupportTag::ExcludedS,
                         SupportTag::OpenS0, SupportTag::ExcludedResidue, SupportTag::Unknown}) {
        if (to_string(t) == text) return t;
    }
    throw std::invalid_argument("unknown support tag: " + text);
}

}  // namespace quadring
