// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "vctls/config.hpp"
#include "vctls/identity/identity.hpp"
#include "vctls/wire/codec.hpp"

namespace vctls::handshake {

struct NegotiationOutcome {
    uint8_t client_cert_type = wire::kCertTypeX509;
    uint8_t server_cert_type = wire::kCertTypeX509;
    std::vector<uint16_t> shared_did_methods;
    bool fallback = false;
    bool operator==(const NegotiationOutcome&) const = default;
};

// Certificate-type extensions as the client offered them (absent when the
// extension was not sent at all).
struct ClientOffer {
    std::optional<std::vector<uint8_t>> client_cert_types;
    std::optional<std::vector<uint8_t>> server_cert_types;
    std::optional<std::vector<uint16_t>> did_methods;
};

struct ServerPolicy {
    std::vector<uint8_t> client_cert_types; // types acceptable for client auth
    std::vector<uint8_t> server_cert_types; // types it can authenticate as
    bool rfc7250_enabled = true;
    bool request_client_auth = false;
};

// The server picks, per direction, the first type in the client's
// preference list it supports. No certificate-type extensions from the
// client, or a server without RFC-7250 support, falls back to plain X.509.
NegotiationOutcome negotiate_cert_types(const ClientOffer& offer,
                                        const ServerPolicy& policy); // UnsupportedCertificate

// Intersection preserving client order.
std::vector<uint16_t> negotiate_did_methods(const std::vector<uint16_t>& client,
                                            const std::vector<uint16_t>& server);

// The endpoint authenticating with a VC must find its own DID method in
// the shared list, otherwise it aborts.
void check_own_did_in_shared(const identity::Did& own, const std::vector<uint16_t>& shared,
                             const MethodRegistry& registry); // HandshakeFailure

} // namespace vctls::handshake
