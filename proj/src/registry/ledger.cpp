// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/registry/ledger.hpp"

#include <mutex>

namespace vctls::registry {

identity::Did Ledger::create(const identity::DidDocument& doc) {
    identity::validate(doc);
    std::unique_lock lock(mu_);
    auto [it, inserted] = entries_.try_emplace(doc.id.method_specific_id, Entry{doc, EntryStatus::active, 1});
    if (!inserted) raise(Err::AlreadyExists, doc.id.str());
    return doc.id;
}

Ledger::Lookup Ledger::resolve_document(const identity::Did& did) const {
    std::shared_lock lock(mu_);
    auto it = entries_.find(did.method_specific_id);
    if (it == entries_.end() || it->second.document.id != did) raise(Err::NotFound, did.str());
    if (it->second.status == EntryStatus::deactivated) raise(Err::Deactivated, did.str());
    return Lookup{it->second.document, it->second.version};
}

uint64_t Ledger::update(const identity::Did& did, const identity::DidDocument& new_doc,
                        const crypto::Signature& control_sig) {
    identity::validate(new_doc);
    if (new_doc.id != did) raise(Err::SchemaViolation, "updated document must keep the DID " + did.str());
    std::unique_lock lock(mu_);
    auto it = entries_.find(did.method_specific_id);
    if (it == entries_.end() || it->second.document.id != did) raise(Err::NotFound, did.str());
    if (it->second.status == EntryStatus::deactivated) raise(Err::Deactivated, did.str());
    if (!crypto::ed25519_verify(it->second.document.public_key, identity::canonical_bytes(new_doc), control_sig))
        raise(Err::BadControlProof, "update of " + did.str());
    it->second.document = new_doc;
    it->second.version += 1;
    return it->second.version;
}

void Ledger::deactivate(const identity::Did& did, const crypto::Signature& control_sig) {
    std::unique_lock lock(mu_);
    auto it = entries_.find(did.method_specific_id);
    if (it == entries_.end() || it->second.document.id != did) raise(Err::NotFound, did.str());
    if (it->second.status == EntryStatus::deactivated) raise(Err::Deactivated, did.str());
    if (!crypto::ed25519_verify(it->second.document.public_key, deactivate_message(did), control_sig))
        raise(Err::BadControlProof, "deactivate of " + did.str());
    it->second.status = EntryStatus::deactivated;
    it->second.version += 1;
}

Bytes Ledger::deactivate_message(const identity::Did& did) { return to_bytes("deactivate:" + did.str()); }

size_t Ledger::size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
}

} // namespace vctls::registry
