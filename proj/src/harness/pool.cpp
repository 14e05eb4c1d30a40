// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/harness/pool.hpp"

namespace vctls::harness {

using handshake::CredentialKind;

const handshake::Credential& CredentialPool::pick(CredentialKind kind, std::mt19937_64& rng) const {
    const std::vector<handshake::Credential>* creds = nullptr;
    switch (kind) {
    case CredentialKind::vc: creds = &vc_creds; break;
    case CredentialKind::x509: creds = &x509_creds; break;
    case CredentialKind::raw_public_key: creds = &rpk_creds; break;
    }
    if (!creds || creds->empty()) raise(Err::AssertionFailure, "credential pool is empty");
    std::uniform_int_distribution<size_t> dist(0, creds->size() - 1);
    return (*creds)[dist(rng)];
}

CredentialPool make_pool(size_t per_kind, UnixSeconds now, const ProtocolConfig& protocol,
                         const std::string& method_name) {
    CredentialPool pool;
    pool.protocol = protocol;
    pool.now = now;
    pool.ledger = std::make_shared<registry::Ledger>();
    pool.registry_keys = crypto::ed25519_generate();
    pool.issuer = identity::generate_identity(method_name, protocol.methods);
    pool.ledger->create(pool.issuer.document);

    UnixSeconds not_before = now - 3600;
    UnixSeconds not_after = now + 30 * 86400;
    for (size_t i = 0; i < per_kind; ++i) {
        identity::Identity id = identity::generate_identity(method_name, protocol.methods);
        pool.ledger->create(id.document);
        nlohmann::json claims = {{"device", "node-" + std::to_string(i)}, {"role", "sensor"}};
        identity::VerifiableCredential vc =
            identity::issue_vc(pool.issuer.keys, pool.issuer.did, id.did, claims, not_before, not_after);
        pool.vc_creds.push_back(handshake::vc_credential(id, std::move(vc)));

        std::string n = std::to_string(i);
        identity::ChainBundle bundle =
            identity::make_chain({"leaf-" + n, "intermediate-" + n, "root-" + n}, not_before, not_after);
        pool.anchors.push_back(bundle.root());
        pool.x509_creds.push_back(handshake::x509_credential(bundle));

        pool.rpk_creds.push_back(handshake::rpk_credential(crypto::ed25519_generate()));
    }
    return pool;
}

handshake::EndpointConfig make_endpoint_config(const CredentialPool& pool, const EndpointSpec& spec,
                                               std::shared_ptr<registry::Resolver> resolver, std::mt19937_64& rng) {
    handshake::EndpointConfig cfg;
    cfg.protocol = pool.protocol;
    cfg.now = pool.now;
    cfg.trust_anchors = pool.anchors;
    cfg.resolver = registry::ResolverConfig{spec.resolver_mode, pool.registry_keys.pk, std::move(resolver)};
    if (spec.pin_issuer) cfg.trusted_issuers[pool.issuer.did.str()] = pool.issuer.keys.pk;
    cfg.rfc7250_enabled = spec.rfc7250_enabled;

    uint8_t vc_code = pool.protocol.points.vc_certificate_type;
    auto code_for = [&](CredentialKind kind) -> uint8_t {
        switch (kind) {
        case CredentialKind::vc: return vc_code;
        case CredentialKind::raw_public_key: return wire::kCertTypeRawPublicKey;
        case CredentialKind::x509: break;
        }
        return wire::kCertTypeX509;
    };

    if (spec.credential) cfg.credential = pool.pick(*spec.credential, rng);

    if (spec.is_client) {
        CredentialKind expected = spec.peer_kind;
        if (spec.offer_vc_anyway)
            cfg.supported_server_cert_types = {vc_code, wire::kCertTypeX509};
        else
            cfg.supported_server_cert_types = {code_for(expected)};
        if (spec.mutual && spec.credential) cfg.supported_client_cert_types = {code_for(*spec.credential)};
        cfg.did_methods = pool.protocol.methods.all_codes();
    } else {
        if (spec.credential) cfg.supported_server_cert_types = {code_for(*spec.credential)};
        if (spec.mutual) cfg.supported_client_cert_types = {code_for(spec.peer_kind)};
        cfg.request_client_auth = spec.mutual;
        std::optional<uint16_t> own = pool.protocol.methods.code_of(pool.issuer.did.method_name);
        cfg.did_methods = {own.value_or(0)};
    }
    return cfg;
}

} // namespace vctls::harness
