// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Mock DLT acting as root of trust for DID Documents. Single in-process
// map, single writer behind a shared mutex, tombstones persist forever.

#pragma once

#include <map>
#include <shared_mutex>

#include "vctls/identity/identity.hpp"

namespace vctls::registry {

enum class EntryStatus { active, deactivated };

class Ledger {
public:
    struct Lookup {
        identity::DidDocument document;
        uint64_t version = 0;
    };

    identity::Did create(const identity::DidDocument& doc); // AlreadyExists, SchemaViolation
    Lookup resolve_document(const identity::Did& did) const; // NotFound, Deactivated

    // Control proof: Ed25519 by the currently registered key over
    // canonical_bytes(new_doc).
    uint64_t update(const identity::Did& did, const identity::DidDocument& new_doc,
                    const crypto::Signature& control_sig); // NotFound, Deactivated, BadControlProof

    // Control proof: Ed25519 by the currently registered key over
    // deactivate_message(did). Irreversible.
    void deactivate(const identity::Did& did, const crypto::Signature& control_sig);

    static Bytes deactivate_message(const identity::Did& did);

    size_t size() const;

private:
    struct Entry {
        identity::DidDocument document;
        EntryStatus status = EntryStatus::active;
        uint64_t version = 1;
    };

    mutable std::shared_mutex mu_;
    std::map<std::string, Entry> entries_; // keyed by method_specific_id
};

} // namespace vctls::registry
