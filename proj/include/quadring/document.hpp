#pragma once

#include "quadring/certificate.hpp"
#include "quadring/ring.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace quadring {

inline constexpr const char* kSchemaVersion = "1";

struct DocumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Certificate document: decimal-string integers, witnesses keyed "12".."34".
nlohmann::json certificate_to_json(const QuadrupleCertificate& cert, bool verified, const SupportStatus& status);

struct ParsedDocument {
    QuadrupleCertificate certificate;
    bool has_witnesses = false;
    std::optional<bool> claimed_verified;
    std::string status;
};

/// Throws DocumentError on missing fields or malformed integers. Witnesses are optional.
ParsedDocument certificate_from_json(const nlohmann::json& doc);

nlohmann::json element_to_json(const RingElement& u);
RingElement element_from_json(const nlohmann::json& value);

}  // namespace quadring
