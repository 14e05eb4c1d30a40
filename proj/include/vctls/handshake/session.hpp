// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Client and server handshake state machines. Sessions are sans-IO byte
// pumps: feed inbound wire bytes with on_bytes(), drain outbound bytes
// with take_output(). One state machine per connection, one logical
// thread of control.

#pragma once

#include <chrono>
#include <deque>
#include <map>
#include <memory>

#include "vctls/handshake/key_schedule.hpp"
#include "vctls/handshake/negotiation.hpp"
#include "vctls/identity/chain.hpp"
#include "vctls/identity/encoding.hpp"
#include "vctls/identity/vc.hpp"
#include "vctls/registry/resolver.hpp"
#include "vctls/time.hpp"

namespace vctls::handshake {

enum class AlertCode : uint8_t {
    bad_record_mac = 20,
    handshake_failure = 40,
    bad_certificate = 42,
    unsupported_certificate = 43,
    decode_error = 50,
    decrypt_error = 51,
    certificate_required = 116,
};

const char* alert_name(AlertCode code);
AlertCode alert_for(Err err);

enum class CredentialKind { vc, x509, raw_public_key };

const char* credential_kind_name(CredentialKind kind);

struct Credential {
    CredentialKind kind = CredentialKind::x509;
    identity::KeyPair keys;
    std::optional<identity::VerifiableCredential> vc; // kind == vc
    std::vector<identity::ChainCertificate> chain;    // kind == x509, leaf first, root included
    std::optional<identity::Did> did;                 // kind == vc: the subject DID
};

Credential vc_credential(const identity::Identity& id, identity::VerifiableCredential vc);
Credential x509_credential(const identity::ChainBundle& bundle);
Credential rpk_credential(identity::KeyPair keys);

struct EndpointConfig {
    ProtocolConfig protocol;
    std::vector<uint8_t> supported_client_cert_types; // client: offer; server: acceptable
    std::vector<uint8_t> supported_server_cert_types;
    std::vector<uint16_t> did_methods;
    std::optional<Credential> credential;
    std::map<std::string, crypto::Key32> trusted_issuers; // issuer DID -> pk (pinning cache)
    std::vector<identity::ChainCertificate> trust_anchors;
    registry::ResolverConfig resolver;
    bool request_client_auth = false; // server side
    bool rfc7250_enabled = true;      // off simulates a legacy peer
    UnixSeconds now = 0;              // injected clock for validity checks
};

// Identity objects only: long-term public keys and identity signatures;
// ephemeral key_share bytes are excluded.
struct PkObjectCount {
    uint64_t public_key_bytes = 0;
    uint64_t signature_bytes = 0;
    uint64_t total() const { return public_key_bytes + signature_bytes; }
    bool operator==(const PkObjectCount&) const = default;
};

struct FlightMetrics {
    uint64_t bytes_sent = 0;     // handshake wire bytes written
    uint64_t bytes_received = 0; // handshake wire bytes consumed
    PkObjectCount pk_objects_sent;
    uint64_t did_resolves = 0;
    std::chrono::nanoseconds resolve_clock{0};
    std::chrono::nanoseconds wall_clock{0};
};

class Session {
public:
    virtual ~Session() = default;
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    void on_bytes(ByteView data);
    Bytes take_output();
    bool has_output() const { return !out_.empty(); }

    bool handshake_complete() const { return complete_; }
    bool failed() const { return failed_; }
    std::optional<AlertCode> alert() const { return alert_; }
    bool alert_was_received() const { return alert_received_; }
    const std::string& failure_detail() const { return failure_detail_; }

    const SessionSecrets& secrets() const; // throws unless complete
    const NegotiationOutcome& outcome() const { return outcome_; }
    FlightMetrics& metrics() { return metrics_; }
    const FlightMetrics& metrics() const { return metrics_; }

    void send_application(ByteView payload); // only when complete
    std::vector<Bytes> take_application();

protected:
    explicit Session(EndpointConfig cfg, bool is_server);

    // state machine hooks
    virtual void process(wire::HandshakeMessage msg, const Bytes& raw) = 0;

    void send_handshake(const wire::HandshakeMessage& msg);
    void send_alert(AlertCode code);
    [[noreturn]] void abort_with(Err err, const std::string& detail);
    void fail_locally(Err err, const std::string& detail);

    // shared authentication pipeline
    crypto::Key32 authenticate_peer_certificate(const wire::CertificateMsg& cert, uint8_t negotiated_type);
    crypto::Key32 authenticate_peer_vc(const identity::VerifiableCredential& vc);
    crypto::Key32 authenticate_peer_x509(const std::vector<Bytes>& entries);
    void verify_certificate_verify(const wire::CertificateVerify& cv, const crypto::Key32& peer_pk,
                                   bool peer_is_server, const Hash& transcript_hash);
    wire::CertificateMsg build_certificate(const Bytes& context, uint8_t negotiated_type);
    wire::CertificateVerify build_certificate_verify(const Hash& transcript_hash);
    void sync_resolver_metrics();
    void mark_complete();

    EndpointConfig cfg_;
    bool is_server_;
    uint8_t vc_code_;
    uint16_t did_methods_code_;

    wire::RecordReader reader_;
    Transcript transcript_;
    KeySchedule schedule_;
    std::optional<wire::TrafficKeys> send_keys_;
    std::optional<wire::TrafficKeys> recv_keys_;
    std::optional<registry::ResolverChannel> channel_;

    NegotiationOutcome outcome_;
    bool complete_ = false;
    bool failed_ = false;
    bool alert_received_ = false;
    std::optional<AlertCode> alert_;
    std::string failure_detail_;

    Bytes out_;
    std::vector<Bytes> app_in_;
    FlightMetrics metrics_;

private:
    void handle_frame(const Bytes& frame);
    void handle_alert_payload(ByteView payload);
};

class ClientSession : public Session {
public:
    explicit ClientSession(EndpointConfig cfg);

private:
    enum class State {
        expect_server_hello,
        expect_encrypted_extensions,
        expect_certificate,
        expect_certificate_verify,
        expect_finished,
        done,
    };

    void process(wire::HandshakeMessage msg, const Bytes& raw) override;
    void send_client_flight();

    State state_ = State::expect_server_hello;
    crypto::X25519KeyPair ephemeral_;
    bool offered_cert_types_ = false;
    bool client_auth_requested_ = false;
    Bytes certificate_request_context_;
    crypto::Key32 server_pk_{};
};

class ServerSession : public Session {
public:
    explicit ServerSession(EndpointConfig cfg);

private:
    enum class State {
        expect_client_hello,
        expect_client_certificate,
        expect_client_certificate_verify,
        expect_client_finished,
        done,
    };

    void process(wire::HandshakeMessage msg, const Bytes& raw) override;
    void send_server_flight(const wire::ClientHello& hello);

    State state_ = State::expect_client_hello;
    crypto::Key32 client_pk_{};
};

} // namespace vctls::handshake
