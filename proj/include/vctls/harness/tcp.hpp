// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "vctls/handshake/run.hpp"

namespace vctls::harness {

class TcpListener {
public:
    explicit TcpListener(uint16_t port = 0); // 0 picks an ephemeral port; IoError
    ~TcpListener();
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    int accept_fd(); // blocking; IoError
    uint16_t port() const { return port_; }

private:
    int fd_ = -1;
    uint16_t port_ = 0;
};

int tcp_connect(const std::string& host, uint16_t port); // IoError
void tcp_close(int fd);
void send_all(int fd, ByteView data);
Bytes recv_some(int fd); // blocking; empty on EOF or timeout

// Drives one session over a connected socket: handshake, then one echo
// round-trip (the client probes, the server reflects).
struct WireOutcome {
    bool handshake_ok = false;
    bool echo_ok = false;
    std::optional<handshake::AlertCode> alert;
    std::string detail;
};

WireOutcome drive_client(handshake::ClientSession& session, int fd);
WireOutcome drive_server(handshake::ServerSession& session, int fd);

// Same contract as run_handshake, but over a localhost socket pair.
handshake::RunResult run_handshake_tcp(const handshake::EndpointConfig& client_cfg,
                                       const handshake::EndpointConfig& server_cfg);

} // namespace vctls::harness
