// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/handshake/run.hpp"

namespace vctls::handshake {

namespace {

void fill_report(EndpointReport& report, Session& session) {
    report.complete = session.handshake_complete();
    report.alert = session.alert();
    report.detail = session.failure_detail();
    report.outcome = session.outcome();
    report.metrics = session.metrics();
    if (session.handshake_complete()) report.secrets = session.secrets();
}

bool settled(const Session& s) { return s.handshake_complete() || s.failed(); }

} // namespace

RunResult run_handshake(const EndpointConfig& client_cfg, const EndpointConfig& server_cfg, const TamperFn& tamper) {
    RunResult result;
    auto started = std::chrono::steady_clock::now();
    try {
        ClientSession client(client_cfg);
        ServerSession server(server_cfg);

        auto pump = [&](Session& from, Session& to, bool client_to_server) {
            Bytes data = from.take_output();
            if (data.empty()) return false;
            if (tamper) tamper(client_to_server, data);
            to.on_bytes(data);
            return true;
        };

        for (int round = 0; round < 64; ++round) {
            bool progress = false;
            progress |= pump(client, server, true);
            progress |= pump(server, client, false);
            if (settled(client) && settled(server) && !client.has_output() && !server.has_output()) break;
            if (!progress) {
                // Stalled transport: typically a tampered length field that
                // leaves a partial record pending forever.
                if (!settled(client)) client.metrics(); // keep metrics coherent
                break;
            }
        }

        bool both_complete = client.handshake_complete() && server.handshake_complete();
        if (both_complete) {
            Bytes probe = crypto::random_bytes(16);
            Bytes request = to_bytes("echo:" + to_hex(probe));
            client.send_application(request);
            pump(client, server, true);
            std::vector<Bytes> at_server = server.take_application();
            if (at_server.size() == 1) {
                server.send_application(at_server[0]);
                pump(server, client, false);
                std::vector<Bytes> at_client = client.take_application();
                result.echo_ok = at_client.size() == 1 && at_client[0] == request;
            }
        }

        auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
        client.metrics().wall_clock = elapsed;
        server.metrics().wall_clock = elapsed;

        fill_report(result.client, client);
        fill_report(result.server, server);
        result.ok = both_complete && result.echo_ok;
        if (!result.ok) {
            if (result.client.alert) result.alert = result.client.alert;
            if (!result.alert && result.server.alert) result.alert = result.server.alert;
            if (!result.alert && !both_complete) result.alert = AlertCode::handshake_failure;
        }
    } catch (const Error& e) {
        result.ok = false;
        result.alert = alert_for(e.code());
        result.client.detail = e.what();
    }
    return result;
}

} // namespace vctls::handshake
