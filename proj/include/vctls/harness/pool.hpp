// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pre-generated experiment world: one issuer, a ledger with every DID
// registered, and a pool of credentials per kind from which runs pick at
// random.

#pragma once

#include <random>

#include "vctls/handshake/session.hpp"
#include "vctls/registry/resolver.hpp"

namespace vctls::harness {

struct CredentialPool {
    ProtocolConfig protocol;
    std::shared_ptr<registry::Ledger> ledger;
    identity::KeyPair registry_keys; // signs authenticated-mode responses
    identity::Identity issuer;
    std::vector<handshake::Credential> vc_creds;
    std::vector<handshake::Credential> x509_creds;
    std::vector<handshake::Credential> rpk_creds;
    std::vector<identity::ChainCertificate> anchors;
    UnixSeconds now = 0;

    const handshake::Credential& pick(handshake::CredentialKind kind, std::mt19937_64& rng) const;
    crypto::Key32 issuer_pk() const { return issuer.keys.pk; }
};

inline constexpr size_t kDefaultPoolSize = 32;

CredentialPool make_pool(size_t per_kind, UnixSeconds now, const ProtocolConfig& protocol = ProtocolConfig::defaults(),
                         const std::string& method_name = "iota");

// An endpoint configuration wired to the pool's world. The resolver is
// injected so callers can swap in HTTP or adversarial resolvers.
struct EndpointSpec {
    bool is_client = true;
    bool mutual = false;
    std::optional<handshake::CredentialKind> credential; // nullopt: no local credential
    handshake::CredentialKind peer_kind = handshake::CredentialKind::x509; // what the peer authenticates with
    bool pin_issuer = false;
    registry::ChannelMode resolver_mode = registry::ChannelMode::plain;
    bool rfc7250_enabled = true;
    bool offer_vc_anyway = false; // fallback scenario: VC-capable client, X.509 credential
};

handshake::EndpointConfig make_endpoint_config(const CredentialPool& pool, const EndpointSpec& spec,
                                               std::shared_ptr<registry::Resolver> resolver, std::mt19937_64& rng);

} // namespace vctls::harness
