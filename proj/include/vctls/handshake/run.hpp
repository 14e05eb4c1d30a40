// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// In-memory driver: pumps a client and a server session against each
// other, then runs one encrypted echo round-trip under application keys.

#pragma once

#include <functional>

#include "vctls/handshake/session.hpp"

namespace vctls::handshake {

struct EndpointReport {
    bool complete = false;
    std::optional<AlertCode> alert;
    std::string detail;
    SessionSecrets secrets{};
    NegotiationOutcome outcome{};
    FlightMetrics metrics{};
};

struct RunResult {
    bool ok = false;      // both complete and the echo round-trip matched
    bool echo_ok = false;
    std::optional<AlertCode> alert; // failure alert, when any
    EndpointReport client;
    EndpointReport server;
};

// Called on every delivered chunk; may mutate bytes in flight.
using TamperFn = std::function<void(bool client_to_server, Bytes& data)>;

RunResult run_handshake(const EndpointConfig& client_cfg, const EndpointConfig& server_cfg,
                        const TamperFn& tamper = {});

} // namespace vctls::handshake
