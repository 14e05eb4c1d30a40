// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/handshake/negotiation.hpp"

#include <algorithm>

namespace vctls::handshake {

namespace {

uint8_t pick_first_supported(const std::vector<uint8_t>& client_preference, const std::vector<uint8_t>& supported,
                             const char* direction) {
    for (uint8_t t : client_preference)
        if (std::find(supported.begin(), supported.end(), t) != supported.end()) return t;
    raise(Err::UnsupportedCertificate, std::string("no shared ") + direction + " certificate type");
}

} // namespace

NegotiationOutcome negotiate_cert_types(const ClientOffer& offer, const ServerPolicy& policy) {
    NegotiationOutcome out;
    bool client_sent_types = offer.client_cert_types.has_value() || offer.server_cert_types.has_value();
    if (!client_sent_types || !policy.rfc7250_enabled) {
        out.fallback = true;
        return out;
    }
    std::vector<uint8_t> server_pref = offer.server_cert_types.value_or(std::vector<uint8_t>{wire::kCertTypeX509});
    out.server_cert_type = pick_first_supported(server_pref, policy.server_cert_types, "server");
    if (policy.request_client_auth) {
        std::vector<uint8_t> client_pref =
            offer.client_cert_types.value_or(std::vector<uint8_t>{wire::kCertTypeX509});
        out.client_cert_type = pick_first_supported(client_pref, policy.client_cert_types, "client");
    }
    return out;
}

std::vector<uint16_t> negotiate_did_methods(const std::vector<uint16_t>& client, const std::vector<uint16_t>& server) {
    std::vector<uint16_t> shared;
    for (uint16_t code : client)
        if (std::find(server.begin(), server.end(), code) != server.end() &&
            std::find(shared.begin(), shared.end(), code) == shared.end())
            shared.push_back(code);
    return shared;
}

void check_own_did_in_shared(const identity::Did& own, const std::vector<uint16_t>& shared,
                             const MethodRegistry& registry) {
    std::optional<uint16_t> code = registry.code_of(own.method_name);
    if (!code || std::find(shared.begin(), shared.end(), *code) == shared.end())
        raise(Err::HandshakeFailure,
              "own DID method '" + own.method_name + "' is outside the shared did_methods list");
}

} // namespace vctls::handshake
