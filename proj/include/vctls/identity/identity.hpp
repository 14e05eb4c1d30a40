// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "vctls/bytes.hpp"
#include "vctls/config.hpp"
#include "vctls/crypto.hpp"

namespace vctls::identity {

using KeyPair = crypto::Ed25519KeyPair;

struct Did {
    std::string method_name;
    std::string method_specific_id;

    std::string str() const { return "did:" + method_name + ":" + method_specific_id; }
    static Did parse(const std::string& s); // SchemaViolation
    auto operator<=>(const Did&) const = default;
};

struct DidDocument {
    Did id;
    std::string verification_method_id; // id + "#keys-1"
    std::string key_type;
    Did controller; // always equals id
    crypto::Key32 public_key{};
    bool operator==(const DidDocument&) const = default;
};

void validate(const DidDocument& doc); // SchemaViolation

// Deterministic serialization: keys sorted lexicographically at every
// nesting level, UTF-8, no insignificant whitespace.
Bytes canonical_bytes(const DidDocument& doc);
DidDocument document_from_bytes(ByteView bytes); // SchemaViolation

DidDocument make_document(const Did& id, const crypto::Key32& public_key);

struct Identity {
    KeyPair keys;
    Did did;
    DidDocument document;
};

// method_specific_id is the lowercase hex SHA-256 of the public key; the
// whole bundle is deterministic under a fixed seed.
Identity generate_identity(const std::string& method_name, const MethodRegistry& registry,
                           std::optional<crypto::Key32> seed = std::nullopt); // UnknownMethod

} // namespace vctls::identity
