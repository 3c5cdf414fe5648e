#include "quadring/document.hpp"

namespace quadring {

using nlohmann::json;

json element_to_json(const RingElement& u) {
    const auto parts = to_strings(u);
    return json::array({parts[0], parts[1]});
}

namespace {

Integer integer_from_json(const json& value, const std::string& what) {
    if (value.is_string()) {
        try {
            return parse_integer(value.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    } else if (value.is_number_integer()) {
        return Integer(value.dump());
    }
    throw DocumentError("bad integer for " + what + ": " + value.dump());
}

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

}  // namespace

RingElement element_from_json(const json& value) {
    if (!value.is_array() || value.size() != 2) throw DocumentError("element must be [x, y]: " + value.dump());
    return {integer_from_json(value[0], "x"), integer_from_json(value[1], "y")};
}

json certificate_to_json(const QuadrupleCertificate& cert, bool verified, const SupportStatus& status) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["d"] = cert.d.get_str();
    doc["n"] = element_to_json(cert.n);
    json elements = json::array();
    for (const auto& e : cert.elements) elements.push_back(element_to_json(e));
    doc["elements"] = elements;
    json witnesses = json::object();
    for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
        witnesses[pair_key(slot)] = element_to_json(cert.witnesses[slot]);
    }
    doc["witnesses"] = witnesses;
    doc["provenance"] = cert.provenance.tag;
    doc["provenance_detail"] = cert.provenance.detail;
    json params = json::object();
    for (const auto& [name, value] : cert.provenance.params) params[name] = value.get_str();
    doc["params"] = params;
    doc["verified"] = verified;
    doc["status"] = to_string(status.tag);
    return doc;
}

ParsedDocument certificate_from_json(const json& doc) {
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    if (doc.contains("schema_version") && doc.at("schema_version") != kSchemaVersion) {
        throw DocumentError("unsupported schema_version " + doc.at("schema_version").dump());
    }
    ParsedDocument out;
    QuadrupleCertificate& cert = out.certificate;
    cert.d = integer_from_json(field(doc, "d"), "d");
    cert.n = element_from_json(field(doc, "n"));
    const json& elements = field(doc, "elements");
    if (!elements.is_array() || elements.size() != 4) throw DocumentError("elements must hold four entries");
    for (std::size_t i = 0; i < 4; ++i) cert.elements[i] = element_from_json(elements[i]);

    if (doc.contains("witnesses") && !doc.at("witnesses").is_null()) {
        const json& witnesses = doc.at("witnesses");
        for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
            cert.witnesses[slot] = element_from_json(field(witnesses, pair_key(slot).c_str()));
        }
        out.has_witnesses = true;
    }
    if (doc.contains("provenance")) cert.provenance.tag = doc.at("provenance").get<std::string>();
    if (doc.contains("provenance_detail")) cert.provenance.detail = doc.at("provenance_detail").get<std::string>();
    if (doc.contains("params")) {
        for (const auto& [name, value] : doc.at("params").items()) {
            cert.provenance.params[name] = integer_from_json(value, name);
        }
    }
    if (doc.contains("verified")) out.claimed_verified = doc.at("verified").get<bool>();
    if (doc.contains("status")) out.status = doc.at("status").get<std::string>();
    return out;
}

}  // namespace quadring
