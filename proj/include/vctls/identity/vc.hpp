// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vctls/identity/identity.hpp"
#include "vctls/time.hpp"

namespace vctls::identity {

struct Proof {
    std::string type;                // "DataIntegrityProof"
    std::string cryptosuite;         // "eddsa-jcs-2022": Ed25519 over sorted-key JSON
    UnixSeconds created = 0;
    std::string proof_purpose;       // "assertionMethod"
    std::string verification_method; // issuer DID + "#keys-1"
    crypto::Signature proof_value{};
    bool operator==(const Proof&) const = default;
};

struct VerifiableCredential {
    std::vector<std::string> context;
    std::string id;
    std::vector<std::string> type;
    Did issuer;
    UnixSeconds issuance_date = 0;
    UnixSeconds expiration_date = 0;
    Did subject;
    nlohmann::json claims = nlohmann::json::object(); // free-form, merged into credentialSubject
    std::optional<Proof> proof;
    bool operator==(const VerifiableCredential&) const = default;
};

void validate(const VerifiableCredential& vc); // SchemaViolation

// Signing input: deterministic serialization with the proof excluded.
Bytes canonical_bytes(const VerifiableCredential& vc);

nlohmann::json vc_to_json(const VerifiableCredential& vc, bool include_proof);
VerifiableCredential vc_from_json(const nlohmann::json& j); // SchemaViolation

VerifiableCredential issue_vc(const KeyPair& issuer_keys, const Did& issuer, const Did& subject,
                              const nlohmann::json& claims, UnixSeconds valid_from,
                              UnixSeconds valid_until); // InvalidValidityWindow

// Returns the subject DID iff schema, validity window and issuer signature
// all check out.
Did verify_vc(const VerifiableCredential& vc, const crypto::Key32& issuer_pk,
              UnixSeconds now); // SchemaViolation, Expired, NotYetValid, BadIssuerSignature

} // namespace vctls::identity
