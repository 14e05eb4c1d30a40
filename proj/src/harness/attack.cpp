// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/harness/attack.hpp"

#include "vctls/handshake/run.hpp"

namespace vctls::harness {

AttackReport run_attack(const CredentialPool& pool, registry::ChannelMode mode) {
    AttackReport report;
    report.mode = mode;
    if (pool.vc_creds.empty()) raise(Err::AssertionFailure, "attack needs a registered VC identity");
    const handshake::Credential& victim = pool.vc_creds.front();

    identity::KeyPair attacker_keys = crypto::ed25519_generate();
    report.log.push_back("victim DID: " + victim.did->str());
    report.log.push_back("attacker key: " + to_hex(attacker_keys.pk));

    auto honest = std::make_shared<registry::LedgerResolver>(pool.ledger, pool.registry_keys);
    auto mitm = std::make_shared<registry::MitmResolver>(honest, attacker_keys);
    identity::DidDocument forged = identity::make_document(*victim.did, attacker_keys.pk);
    mitm->forge(*victim.did, forged);
    report.log.push_back("forged DID Document binds the victim DID to the attacker key");

    std::mt19937_64 rng(0xa77ac);
    EndpointSpec client_spec;
    client_spec.is_client = true;
    client_spec.peer_kind = handshake::CredentialKind::vc;
    client_spec.resolver_mode = mode;
    handshake::EndpointConfig client_cfg = make_endpoint_config(pool, client_spec, mitm, rng);

    EndpointSpec server_spec;
    server_spec.is_client = false;
    server_spec.credential = handshake::CredentialKind::vc;
    server_spec.peer_kind = handshake::CredentialKind::x509;
    server_spec.resolver_mode = mode;
    handshake::EndpointConfig attacker_cfg = make_endpoint_config(pool, server_spec, honest, rng);
    // The attacker presents the victim's VC but signs with its own key.
    handshake::Credential stolen;
    stolen.kind = handshake::CredentialKind::vc;
    stolen.keys = attacker_keys;
    stolen.vc = victim.vc;
    stolen.did = victim.did;
    attacker_cfg.credential = stolen;

    handshake::RunResult result = handshake::run_handshake(client_cfg, attacker_cfg);
    report.alert = result.alert;
    report.impersonation_succeeded = result.ok;
    report.defense_held = !result.ok && result.alert == handshake::AlertCode::bad_certificate;

    if (result.ok) {
        report.log.push_back("handshake completed: the client accepted the attacker's CertificateVerify "
                             "under the forged key");
    } else {
        report.log.push_back("handshake aborted with " +
                             std::string(result.alert ? handshake::alert_name(*result.alert) : "no alert") + ": " +
                             (result.client.detail.empty() ? result.server.detail : result.client.detail));
    }

    report.expectation_met = mode == registry::ChannelMode::plain ? report.impersonation_succeeded
                                                                  : report.defense_held;
    return report;
}

} // namespace vctls::harness
