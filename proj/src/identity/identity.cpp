// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/identity/identity.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace vctls::identity {

namespace {
constexpr const char* kKeyType = "Ed25519VerificationKey2020";
constexpr const char* kFragment = "#keys-1";

bool lowercase(const std::string& s) {
    return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isupper(c); });
}
} // namespace

Did Did::parse(const std::string& s) {
    if (s.rfind("did:", 0) != 0) raise(Err::SchemaViolation, "DID must start with did:");
    size_t sep = s.find(':', 4);
    if (sep == std::string::npos) raise(Err::SchemaViolation, "DID lacks method-specific-id: " + s);
    Did did{s.substr(4, sep - 4), s.substr(sep + 1)};
    if (did.method_name.empty() || did.method_specific_id.empty())
        raise(Err::SchemaViolation, "DID components must be non-empty: " + s);
    if (!lowercase(did.method_name)) raise(Err::SchemaViolation, "DID method name must be lowercase: " + s);
    return did;
}

void validate(const DidDocument& doc) {
    if (doc.id.method_name.empty() || doc.id.method_specific_id.empty())
        raise(Err::SchemaViolation, "document id incomplete");
    if (!lowercase(doc.id.method_name)) raise(Err::SchemaViolation, "method name must be lowercase");
    if (doc.controller != doc.id) raise(Err::SchemaViolation, "controller must equal document id");
    if (doc.verification_method_id.rfind(doc.id.str(), 0) != 0)
        raise(Err::SchemaViolation, "verification method id must extend the document id");
}

Bytes canonical_bytes(const DidDocument& doc) {
    nlohmann::json method = {
        {"controller", doc.controller.str()},
        {"id", doc.verification_method_id},
        {"publicKeyHex", to_hex(doc.public_key)},
        {"type", doc.key_type},
    };
    nlohmann::json j = {
        {"authentication", nlohmann::json::array({method})},
        {"id", doc.id.str()},
    };
    std::string s = j.dump();
    return Bytes(s.begin(), s.end());
}

DidDocument document_from_bytes(ByteView bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes.begin(), bytes.end());
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("document parse: ") + e.what());
    }
    try {
        DidDocument doc;
        doc.id = Did::parse(j.at("id").get<std::string>());
        const auto& method = j.at("authentication").at(0);
        doc.verification_method_id = method.at("id").get<std::string>();
        doc.key_type = method.at("type").get<std::string>();
        doc.controller = Did::parse(method.at("controller").get<std::string>());
        doc.public_key = to_array<32>(from_hex(method.at("publicKeyHex").get<std::string>()));
        validate(doc);
        return doc;
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("document fields: ") + e.what());
    }
}

DidDocument make_document(const Did& id, const crypto::Key32& public_key) {
    DidDocument doc;
    doc.id = id;
    doc.verification_method_id = id.str() + kFragment;
    doc.key_type = kKeyType;
    doc.controller = id;
    doc.public_key = public_key;
    return doc;
}

Identity generate_identity(const std::string& method_name, const MethodRegistry& registry,
                           std::optional<crypto::Key32> seed) {
    if (!registry.has_name(method_name)) raise(Err::UnknownMethod, method_name);
    KeyPair keys = seed ? crypto::ed25519_from_seed(*seed) : crypto::ed25519_generate();
    Did did{method_name, to_hex(crypto::sha256(keys.pk))};
    return Identity{keys, did, make_document(did, keys.pk)};
}

} // namespace vctls::identity
