// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/registry/resolver.hpp"

namespace vctls::registry {

std::string resolve_request_id(const identity::Did& did) {
    return "/resolve/" + did.method_name + "/" + did.method_specific_id;
}

Bytes signed_payload(const identity::Did& did, ByteView body) {
    Bytes payload = to_bytes(resolve_request_id(did));
    payload.insert(payload.end(), body.begin(), body.end());
    return payload;
}

LedgerResolver::LedgerResolver(std::shared_ptr<Ledger> ledger, std::optional<identity::KeyPair> registry_keys)
    : ledger_(std::move(ledger)), registry_keys_(std::move(registry_keys)) {}

ResolveResponse LedgerResolver::resolve(const identity::Did& did) {
    ResolveResponse resp;
    try {
        Ledger::Lookup lookup = ledger_->resolve_document(did);
        resp.body = identity::canonical_bytes(lookup.document);
        resp.version = lookup.version;
    } catch (const Error& e) {
        if (e.code() == Err::NotFound) {
            resp.status = 404;
            return resp;
        }
        if (e.code() == Err::Deactivated) {
            resp.status = 410;
            return resp;
        }
        throw;
    }
    if (registry_keys_)
        resp.signature_hex = to_hex(crypto::ed25519_sign(registry_keys_->seed, signed_payload(did, resp.body)));
    return resp;
}

MitmResolver::MitmResolver(std::shared_ptr<Resolver> inner, identity::KeyPair attacker_keys)
    : inner_(std::move(inner)), attacker_keys_(attacker_keys) {}

void MitmResolver::forge(const identity::Did& did, const identity::DidDocument& doc) {
    forged_[did.str()] = doc;
}

ResolveResponse MitmResolver::resolve(const identity::Did& did) {
    auto it = forged_.find(did.str());
    if (it == forged_.end()) return inner_->resolve(did);
    ResolveResponse resp;
    resp.body = identity::canonical_bytes(it->second);
    resp.version = 1;
    // The attacker does not hold the registry key; the best it can do is
    // sign with its own.
    resp.signature_hex = to_hex(crypto::ed25519_sign(attacker_keys_.seed, signed_payload(did, resp.body)));
    return resp;
}

ResolverChannel::ResolverChannel(ChannelMode mode, std::optional<crypto::Key32> registry_pk,
                                 std::shared_ptr<Resolver> resolver)
    : mode_(mode), registry_pk_(registry_pk), resolver_(std::move(resolver)) {
    if (mode_ == ChannelMode::authenticated && !registry_pk_)
        throw std::invalid_argument("authenticated resolver channel requires the registry public key");
}

identity::DidDocument ResolverChannel::resolve(const identity::Did& did) {
    counter_.fetch_add(1);
    auto started = std::chrono::steady_clock::now();
    ResolveResponse resp = resolver_->resolve(did);
    clock_ns_.fetch_add(std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started)
                            .count());
    if (resp.status == 404) raise(Err::NotFound, did.str());
    if (resp.status == 410) raise(Err::Deactivated, did.str());
    if (resp.status != 200) raise(Err::IoError, "resolver returned status " + std::to_string(resp.status));
    if (mode_ == ChannelMode::authenticated) {
        if (resp.signature_hex.empty()) raise(Err::BadRegistrySignature, "response carries no registry signature");
        Bytes sig = from_hex(resp.signature_hex);
        if (sig.size() != crypto::kSigLen ||
            !crypto::ed25519_verify(*registry_pk_, signed_payload(did, resp.body), to_array<64>(sig)))
            raise(Err::BadRegistrySignature, "registry signature does not verify for " + did.str());
    }
    identity::DidDocument doc = identity::document_from_bytes(resp.body);
    if (doc.id != did) raise(Err::SchemaViolation, "resolved document id mismatch for " + did.str());
    return doc;
}

} // namespace vctls::registry
