// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/identity/vc.hpp"

#include <algorithm>

namespace vctls::identity {

namespace {
constexpr const char* kBaseContext = "https://www.w3.org/2018/credentials/v1";
constexpr const char* kBaseType = "VerifiableCredential";
constexpr const char* kIotType = "IoTCredential";
constexpr const char* kProofType = "DataIntegrityProof";
constexpr const char* kCryptosuite = "eddsa-jcs-2022";
constexpr const char* kProofPurpose = "assertionMethod";
} // namespace

void validate(const VerifiableCredential& vc) {
    if (vc.context.empty()) raise(Err::SchemaViolation, "@context empty");
    if (std::find(vc.type.begin(), vc.type.end(), kBaseType) == vc.type.end())
        raise(Err::SchemaViolation, "type lacks VerifiableCredential");
    if (vc.id.empty()) raise(Err::SchemaViolation, "credential id empty");
    if (vc.issuance_date >= vc.expiration_date) raise(Err::SchemaViolation, "issuanceDate not before expirationDate");
    if (vc.subject.method_name.empty() || vc.subject.method_specific_id.empty())
        raise(Err::SchemaViolation, "credentialSubject.id incomplete");
    if (!vc.claims.is_object()) raise(Err::SchemaViolation, "claims must be an object");
    if (vc.claims.contains("id")) raise(Err::SchemaViolation, "claims may not shadow credentialSubject.id");
    if (vc.proof) {
        if (vc.proof->verification_method.rfind(vc.issuer.str(), 0) != 0)
            raise(Err::SchemaViolation, "proof verificationMethod must begin with the issuer DID");
    }
}

nlohmann::json vc_to_json(const VerifiableCredential& vc, bool include_proof) {
    nlohmann::json subject = vc.claims;
    subject["id"] = vc.subject.str();
    nlohmann::json j = {
        {"@context", vc.context},
        {"credentialSubject", subject},
        {"expirationDate", rfc3339_utc(vc.expiration_date)},
        {"id", vc.id},
        {"issuanceDate", rfc3339_utc(vc.issuance_date)},
        {"issuer", vc.issuer.str()},
        {"type", vc.type},
    };
    if (include_proof && vc.proof) {
        j["proof"] = {
            {"created", rfc3339_utc(vc.proof->created)},
            {"cryptosuite", vc.proof->cryptosuite},
            {"proofPurpose", vc.proof->proof_purpose},
            {"proofValue", to_hex(vc.proof->proof_value)},
            {"type", vc.proof->type},
            {"verificationMethod", vc.proof->verification_method},
        };
    }
    return j;
}

VerifiableCredential vc_from_json(const nlohmann::json& j) {
    try {
        VerifiableCredential vc;
        vc.context = j.at("@context").get<std::vector<std::string>>();
        vc.id = j.at("id").get<std::string>();
        vc.type = j.at("type").get<std::vector<std::string>>();
        vc.issuer = Did::parse(j.at("issuer").get<std::string>());
        vc.issuance_date = rfc3339_parse(j.at("issuanceDate").get<std::string>());
        vc.expiration_date = rfc3339_parse(j.at("expirationDate").get<std::string>());
        nlohmann::json subject = j.at("credentialSubject");
        vc.subject = Did::parse(subject.at("id").get<std::string>());
        subject.erase("id");
        vc.claims = std::move(subject);
        if (j.contains("proof")) {
            const auto& p = j.at("proof");
            Proof proof;
            proof.type = p.at("type").get<std::string>();
            proof.cryptosuite = p.at("cryptosuite").get<std::string>();
            proof.created = rfc3339_parse(p.at("created").get<std::string>());
            proof.proof_purpose = p.at("proofPurpose").get<std::string>();
            proof.verification_method = p.at("verificationMethod").get<std::string>();
            proof.proof_value = to_array<64>(from_hex(p.at("proofValue").get<std::string>()));
            vc.proof = std::move(proof);
        }
        validate(vc);
        return vc;
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("credential fields: ") + e.what());
    }
}

Bytes canonical_bytes(const VerifiableCredential& vc) {
    std::string s = vc_to_json(vc, /*include_proof=*/false).dump();
    return Bytes(s.begin(), s.end());
}

VerifiableCredential issue_vc(const KeyPair& issuer_keys, const Did& issuer, const Did& subject,
                              const nlohmann::json& claims, UnixSeconds valid_from, UnixSeconds valid_until) {
    if (valid_from >= valid_until) raise(Err::InvalidValidityWindow, "validity end not after start");
    VerifiableCredential vc;
    vc.context = {kBaseContext};
    vc.type = {kBaseType, kIotType};
    vc.issuer = issuer;
    vc.issuance_date = valid_from;
    vc.expiration_date = valid_until;
    vc.subject = subject;
    vc.claims = claims.is_null() ? nlohmann::json::object() : claims;

    // Credential id derived from content so issuance is a pure function.
    Bytes seed = canonical_bytes(vc);
    vc.id = "https://credentials.example/" + to_hex(crypto::sha256(seed)).substr(0, 16);

    Proof proof;
    proof.type = kProofType;
    proof.cryptosuite = kCryptosuite;
    proof.created = valid_from;
    proof.proof_purpose = kProofPurpose;
    proof.verification_method = issuer.str() + "#keys-1";
    proof.proof_value = crypto::ed25519_sign(issuer_keys.seed, canonical_bytes(vc));
    vc.proof = std::move(proof);
    validate(vc);
    return vc;
}

Did verify_vc(const VerifiableCredential& vc, const crypto::Key32& issuer_pk, UnixSeconds now) {
    validate(vc);
    if (!vc.proof) raise(Err::SchemaViolation, "credential lacks proof");
    if (vc.proof->type != kProofType || vc.proof->cryptosuite != kCryptosuite)
        raise(Err::SchemaViolation, "unsupported proof suite");
    if (now < vc.issuance_date) raise(Err::NotYetValid, "credential not yet valid");
    if (now > vc.expiration_date) raise(Err::Expired, "credential expired");
    if (!crypto::ed25519_verify(issuer_pk, canonical_bytes(vc), vc.proof->proof_value))
        raise(Err::BadIssuerSignature, "issuer signature does not verify");
    return vc.subject;
}

} // namespace vctls::identity
