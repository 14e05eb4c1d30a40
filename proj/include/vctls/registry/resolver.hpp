// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// DID resolution with channel security. A Resolver produces raw responses
// (status, body, optional registry signature); the ResolverChannel counts
// calls and, in authenticated mode, verifies the registry signature over
// (request id || body) before trusting anything. The MiTM wrapper forges
// responses for selected DIDs and can only re-sign with its own key.

#pragma once

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <optional>

#include "vctls/identity/identity.hpp"
#include "vctls/registry/ledger.hpp"

namespace vctls::registry {

enum class ChannelMode { plain, authenticated };

struct ResolveResponse {
    int status = 200; // 200 ok, 404 not found, 410 deactivated
    Bytes body;       // canonical document serialization when 200
    std::string signature_hex;
    uint64_t version = 0;
};

class Resolver {
public:
    virtual ~Resolver() = default;
    virtual ResolveResponse resolve(const identity::Did& did) = 0;
};

std::string resolve_request_id(const identity::Did& did); // "/resolve/<method>/<id>"
Bytes signed_payload(const identity::Did& did, ByteView body);

// Honest in-process resolver over the ledger; signs responses when it
// holds the registry key.
class LedgerResolver : public Resolver {
public:
    LedgerResolver(std::shared_ptr<Ledger> ledger, std::optional<identity::KeyPair> registry_keys);
    ResolveResponse resolve(const identity::Did& did) override;

private:
    std::shared_ptr<Ledger> ledger_;
    std::optional<identity::KeyPair> registry_keys_;
};

class MitmResolver : public Resolver {
public:
    MitmResolver(std::shared_ptr<Resolver> inner, identity::KeyPair attacker_keys);
    void forge(const identity::Did& did, const identity::DidDocument& doc);
    ResolveResponse resolve(const identity::Did& did) override;

private:
    std::shared_ptr<Resolver> inner_;
    identity::KeyPair attacker_keys_;
    std::map<std::string, identity::DidDocument> forged_;
};

class ResolverChannel {
public:
    ResolverChannel(ChannelMode mode, std::optional<crypto::Key32> registry_pk, std::shared_ptr<Resolver> resolver);

    // NotFound, Deactivated, BadRegistrySignature (authenticated mode).
    identity::DidDocument resolve(const identity::Did& did);

    uint64_t resolve_count() const { return counter_.load(); }
    std::chrono::nanoseconds resolve_clock() const { return std::chrono::nanoseconds(clock_ns_.load()); }
    ChannelMode mode() const { return mode_; }

private:
    ChannelMode mode_;
    std::optional<crypto::Key32> registry_pk_;
    std::shared_ptr<Resolver> resolver_;
    std::atomic<uint64_t> counter_{0};
    std::atomic<int64_t> clock_ns_{0};
};

// Per-endpoint recipe for building a fresh channel (sessions own their
// channel so resolve counts stay per-connection).
struct ResolverConfig {
    ChannelMode mode = ChannelMode::plain;
    std::optional<crypto::Key32> registry_pk;
    std::shared_ptr<Resolver> resolver;

    ResolverChannel make_channel() const { return ResolverChannel(mode, registry_pk, resolver); }
};

} // namespace vctls::registry
