// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/harness/tcp.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <thread>

namespace vctls::harness {

namespace {

void set_timeout(int fd, int seconds) {
    timeval tv{};
    tv.tv_sec = seconds;
    setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
}

bool settled(const handshake::Session& s) { return s.handshake_complete() || s.failed(); }

void flush(handshake::Session& session, int fd) {
    Bytes out = session.take_output();
    if (!out.empty()) send_all(fd, out);
}

void handshake_loop(handshake::Session& session, int fd) {
    while (!settled(session)) {
        flush(session, fd);
        if (settled(session)) break;
        Bytes in = recv_some(fd);
        if (in.empty()) {
            if (!settled(session)) throw Error(Err::HandshakeFailure, "transport closed mid-handshake");
            break;
        }
        session.on_bytes(in);
    }
    flush(session, fd); // trailing flight or alert
}

WireOutcome outcome_of(const handshake::Session& session) {
    WireOutcome out;
    out.handshake_ok = session.handshake_complete();
    out.alert = session.alert();
    out.detail = session.failure_detail();
    return out;
}

} // namespace

TcpListener::TcpListener(uint16_t port) {
    fd_ = socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) raise(Err::IoError, "socket failed");
    int one = 1;
    setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd_, 8) != 0) {
        ::close(fd_);
        raise(Err::IoError, "cannot listen on port " + std::to_string(port));
    }
    socklen_t len = sizeof addr;
    getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

int TcpListener::accept_fd() {
    int fd = ::accept(fd_, nullptr, nullptr);
    if (fd < 0) raise(Err::IoError, "accept failed");
    set_timeout(fd, 10);
    int one = 1;
    setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    return fd;
}

int tcp_connect(const std::string& host, uint16_t port) {
    int fd = socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) raise(Err::IoError, "socket failed");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        ::close(fd);
        raise(Err::IoError, "bad address " + host);
    }
    if (connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
        ::close(fd);
        raise(Err::IoError, "cannot connect to " + host + ":" + std::to_string(port));
    }
    set_timeout(fd, 10);
    int one = 1;
    setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    return fd;
}

void tcp_close(int fd) {
    if (fd >= 0) ::close(fd);
}

void send_all(int fd, ByteView data) {
    size_t sent = 0;
    while (sent < data.size()) {
        ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n <= 0) raise(Err::IoError, "send failed");
        sent += static_cast<size_t>(n);
    }
}

Bytes recv_some(int fd) {
    Bytes buf(4096);
    ssize_t n = ::recv(fd, buf.data(), buf.size(), 0);
    if (n <= 0) return {};
    buf.resize(static_cast<size_t>(n));
    return buf;
}

WireOutcome drive_client(handshake::ClientSession& session, int fd) {
    auto started = std::chrono::steady_clock::now();
    WireOutcome out;
    try {
        handshake_loop(session, fd);
        out = outcome_of(session);
        if (out.handshake_ok) {
            Bytes probe = crypto::random_bytes(16);
            Bytes request = to_bytes("echo:" + to_hex(probe));
            session.send_application(request);
            flush(session, fd);
            while (true) {
                std::vector<Bytes> replies = session.take_application();
                if (!replies.empty()) {
                    out.echo_ok = replies.size() == 1 && replies[0] == request;
                    break;
                }
                Bytes in = recv_some(fd);
                if (in.empty()) break;
                session.on_bytes(in);
                if (session.failed()) break;
            }
        }
    } catch (const Error& e) {
        out.handshake_ok = false;
        out.alert = session.alert() ? session.alert() : std::make_optional(handshake::alert_for(e.code()));
        out.detail = e.what();
    }
    session.metrics().wall_clock =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return out;
}

WireOutcome drive_server(handshake::ServerSession& session, int fd) {
    auto started = std::chrono::steady_clock::now();
    WireOutcome out;
    try {
        handshake_loop(session, fd);
        out = outcome_of(session);
        if (out.handshake_ok) {
            while (true) {
                std::vector<Bytes> requests = session.take_application();
                if (!requests.empty()) {
                    session.send_application(requests[0]);
                    flush(session, fd);
                    out.echo_ok = true;
                    break;
                }
                Bytes in = recv_some(fd);
                if (in.empty()) break;
                session.on_bytes(in);
                if (session.failed()) break;
            }
        }
    } catch (const Error& e) {
        out.handshake_ok = false;
        out.alert = session.alert() ? session.alert() : std::make_optional(handshake::alert_for(e.code()));
        out.detail = e.what();
    }
    session.metrics().wall_clock =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return out;
}

handshake::RunResult run_handshake_tcp(const handshake::EndpointConfig& client_cfg,
                                       const handshake::EndpointConfig& server_cfg) {
    handshake::RunResult result;
    TcpListener listener;
    handshake::ServerSession server(server_cfg);
    WireOutcome server_out;
    std::thread server_thread([&] {
        int fd = listener.accept_fd();
        server_out = drive_server(server, fd);
        tcp_close(fd);
    });
    handshake::ClientSession client(client_cfg);
    int fd = tcp_connect("127.0.0.1", listener.port());
    WireOutcome client_out = drive_client(client, fd);
    server_thread.join();
    tcp_close(fd);

    auto fill = [](handshake::EndpointReport& report, handshake::Session& session) {
        report.complete = session.handshake_complete();
        report.alert = session.alert();
        report.detail = session.failure_detail();
        report.outcome = session.outcome();
        report.metrics = session.metrics();
        if (session.handshake_complete()) report.secrets = session.secrets();
    };
    fill(result.client, client);
    fill(result.server, server);
    result.echo_ok = client_out.echo_ok && server_out.echo_ok;
    result.ok = result.client.complete && result.server.complete && result.echo_ok;
    if (!result.ok) {
        result.alert = result.client.alert ? result.client.alert : result.server.alert;
        if (!result.alert) result.alert = handshake::AlertCode::handshake_failure;
    }
    return result;
}

} // namespace vctls::harness
