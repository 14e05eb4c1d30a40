// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/handshake/session.hpp"

#include <algorithm>

namespace vctls::handshake {

namespace {

bool contains_code(const std::vector<uint8_t>& list, uint8_t code) {
    return std::find(list.begin(), list.end(), code) != list.end();
}

bool contains_method(const std::vector<uint16_t>& list, uint16_t code) {
    return std::find(list.begin(), list.end(), code) != list.end();
}

} // namespace

const char* alert_name(AlertCode code) {
    switch (code) {
    case AlertCode::bad_record_mac: return "bad_record_mac";
    case AlertCode::handshake_failure: return "handshake_failure";
    case AlertCode::bad_certificate: return "bad_certificate";
    case AlertCode::unsupported_certificate: return "unsupported_certificate";
    case AlertCode::decode_error: return "decode_error";
    case AlertCode::decrypt_error: return "decrypt_error";
    case AlertCode::certificate_required: return "certificate_required";
    }
    return "unknown_alert";
}

AlertCode alert_for(Err err) {
    switch (err) {
    case Err::Truncated:
    case Err::UnknownMessageType:
    case Err::VectorBoundViolation:
    case Err::OddLength:
    case Err::EmptyList:
    case Err::LengthMismatch:
    case Err::FieldTooLong:
    case Err::MissingMandatoryExtension:
    case Err::SchemaViolation:
    case Err::DecodeError: return AlertCode::decode_error;
    case Err::AuthTagMismatch:
    case Err::BadRecordMac: return AlertCode::bad_record_mac;
    case Err::DecryptError: return AlertCode::decrypt_error;
    case Err::UnsupportedCertificate: return AlertCode::unsupported_certificate;
    case Err::BadCertificate:
    case Err::Expired:
    case Err::NotYetValid:
    case Err::BadIssuerSignature:
    case Err::BrokenChain:
    case Err::UntrustedRoot:
    case Err::NotFound:
    case Err::Deactivated:
    case Err::BadRegistrySignature: return AlertCode::bad_certificate;
    case Err::CertificateRequired: return AlertCode::certificate_required;
    default: return AlertCode::handshake_failure;
    }
}

const char* credential_kind_name(CredentialKind kind) {
    switch (kind) {
    case CredentialKind::vc: return "vc";
    case CredentialKind::x509: return "x509";
    case CredentialKind::raw_public_key: return "rpk";
    }
    return "?";
}

Credential vc_credential(const identity::Identity& id, identity::VerifiableCredential vc) {
    Credential cred;
    cred.kind = CredentialKind::vc;
    cred.keys = id.keys;
    cred.did = id.did;
    cred.vc = std::move(vc);
    return cred;
}

Credential x509_credential(const identity::ChainBundle& bundle) {
    Credential cred;
    cred.kind = CredentialKind::x509;
    cred.keys = bundle.leaf_keys();
    cred.chain = bundle.chain;
    return cred;
}

Credential rpk_credential(identity::KeyPair keys) {
    Credential cred;
    cred.kind = CredentialKind::raw_public_key;
    cred.keys = keys;
    return cred;
}

Session::Session(EndpointConfig cfg, bool is_server)
    : cfg_(std::move(cfg)),
      is_server_(is_server),
      vc_code_(cfg_.protocol.points.vc_certificate_type),
      did_methods_code_(cfg_.protocol.points.did_methods_extension) {
    if (cfg_.resolver.resolver)
        channel_.emplace(cfg_.resolver.mode, cfg_.resolver.registry_pk, cfg_.resolver.resolver);
}

const SessionSecrets& Session::secrets() const {
    if (!complete_) throw std::logic_error("secrets are not released before handshake completion");
    return schedule_.secrets();
}

void Session::on_bytes(ByteView data) {
    if (failed_) return;
    if (!complete_) metrics_.bytes_received += data.size();
    reader_.feed(data);
    try {
        while (auto frame = reader_.next()) handle_frame(*frame);
    } catch (const Error& e) {
        fail_locally(e.code(), e.what());
    } catch (const std::exception& e) {
        fail_locally(Err::HandshakeFailure, e.what());
    }
}

Bytes Session::take_output() { return std::exchange(out_, Bytes{}); }

void Session::handle_frame(const Bytes& frame) {
    if (failed_) return;
    wire::ContentType outer = wire::frame_content_type(frame);
    ByteView payload = ByteView(frame).subspan(wire::kRecordHeaderLen);
    switch (outer) {
    case wire::ContentType::handshake: {
        if (recv_keys_) raise(Err::DecodeError, "plaintext handshake record after key establishment");
        process(wire::decode_message(payload), Bytes(payload.begin(), payload.end()));
        return;
    }
    case wire::ContentType::alert: {
        handle_alert_payload(payload);
        return;
    }
    case wire::ContentType::application_data: {
        if (!recv_keys_) raise(Err::DecodeError, "sealed record before key establishment");
        wire::Record inner = wire::open_record(*recv_keys_, frame);
        switch (inner.content_type) {
        case wire::ContentType::handshake:
            process(wire::decode_message(inner.payload), inner.payload);
            return;
        case wire::ContentType::alert: handle_alert_payload(inner.payload); return;
        case wire::ContentType::application_data:
            if (!complete_) raise(Err::DecodeError, "application data before handshake completion");
            app_in_.push_back(std::move(inner.payload));
            return;
        }
        raise(Err::DecodeError, "unknown inner content type");
    }
    }
    raise(Err::DecodeError, "unknown record content type");
}

void Session::handle_alert_payload(ByteView payload) {
    if (payload.size() != 2) raise(Err::DecodeError, "malformed alert");
    failed_ = true;
    alert_received_ = true;
    alert_ = static_cast<AlertCode>(payload[1]);
    failure_detail_ = std::string("peer alert: ") + alert_name(*alert_);
    sync_resolver_metrics();
}

void Session::send_handshake(const wire::HandshakeMessage& msg) {
    Bytes raw = wire::encode_message(msg);
    transcript_.append(raw);
    wire::Record rec{wire::ContentType::handshake, std::move(raw)};
    Bytes framed = send_keys_ ? wire::seal_record(*send_keys_, rec) : wire::frame_plaintext(rec);
    if (!complete_) metrics_.bytes_sent += framed.size();
    out_.insert(out_.end(), framed.begin(), framed.end());
}

void Session::send_alert(AlertCode code) {
    wire::Record rec{wire::ContentType::alert, Bytes{2 /* fatal */, static_cast<uint8_t>(code)}};
    try {
        Bytes framed = send_keys_ ? wire::seal_record(*send_keys_, rec) : wire::frame_plaintext(rec);
        if (!complete_) metrics_.bytes_sent += framed.size();
        out_.insert(out_.end(), framed.begin(), framed.end());
    } catch (const std::exception&) {
        // nothing sane to send; the peer will observe the stall
    }
}

void Session::abort_with(Err err, const std::string& detail) { throw Error(err, detail); }

void Session::fail_locally(Err err, const std::string& detail) {
    if (failed_) return;
    failed_ = true;
    alert_ = alert_for(err);
    failure_detail_ = detail;
    send_alert(*alert_);
    sync_resolver_metrics();
}

void Session::sync_resolver_metrics() {
    if (channel_) {
        metrics_.did_resolves = channel_->resolve_count();
        metrics_.resolve_clock = channel_->resolve_clock();
    }
}

void Session::mark_complete() {
    complete_ = true;
    sync_resolver_metrics();
}

crypto::Key32 Session::authenticate_peer_certificate(const wire::CertificateMsg& cert, uint8_t negotiated_type) {
    if (negotiated_type == vc_code_) {
        if (cert.entries.size() != 1)
            abort_with(Err::BadCertificate, "VC certificate message must carry exactly one entry");
        identity::VerifiableCredential vc;
        try {
            vc = identity::vc_from_der(cert.entries[0]);
        } catch (const Error& e) {
            abort_with(Err::BadCertificate, std::string("credential decode: ") + e.what());
        }
        return authenticate_peer_vc(vc);
    }
    if (negotiated_type == wire::kCertTypeRawPublicKey) {
        if (cert.entries.size() != 1 || cert.entries[0].size() != crypto::kPkLen)
            abort_with(Err::BadCertificate, "raw public key entry must be exactly 32 bytes");
        return to_array<32>(cert.entries[0]);
    }
    if (negotiated_type == wire::kCertTypeX509) return authenticate_peer_x509(cert.entries);
    abort_with(Err::BadCertificate, "unsupported negotiated certificate type");
}

crypto::Key32 Session::authenticate_peer_vc(const identity::VerifiableCredential& vc) {
    if (!channel_) abort_with(Err::BadCertificate, "no resolver configured for VC authentication");

    crypto::Key32 issuer_pk{};
    auto pinned = cfg_.trusted_issuers.find(vc.issuer.str());
    if (pinned != cfg_.trusted_issuers.end()) {
        issuer_pk = pinned->second;
    } else {
        try {
            issuer_pk = channel_->resolve(vc.issuer).public_key;
        } catch (const Error& e) {
            sync_resolver_metrics();
            abort_with(Err::BadCertificate, std::string("issuer DID resolution: ") + e.what());
        }
    }

    identity::Did subject;
    try {
        subject = identity::verify_vc(vc, issuer_pk, cfg_.now);
    } catch (const Error& e) {
        sync_resolver_metrics();
        abort_with(Err::BadCertificate, std::string("credential verification: ") + e.what());
    }

    std::optional<uint16_t> method_code = cfg_.protocol.methods.code_of(subject.method_name);
    if (!method_code || !contains_method(outcome_.shared_did_methods, *method_code))
        abort_with(Err::HandshakeFailure,
                   "peer credential DID method '" + subject.method_name + "' not in shared did_methods");

    identity::DidDocument subject_doc;
    try {
        subject_doc = channel_->resolve(subject);
    } catch (const Error& e) {
        sync_resolver_metrics();
        abort_with(Err::BadCertificate, std::string("subject DID resolution: ") + e.what());
    }
    sync_resolver_metrics();
    return subject_doc.public_key;
}

crypto::Key32 Session::authenticate_peer_x509(const std::vector<Bytes>& entries) {
    std::vector<identity::ChainCertificate> chain;
    try {
        for (const Bytes& entry : entries) chain.push_back(identity::cert_from_bytes(entry));
    } catch (const Error& e) {
        abort_with(Err::BadCertificate, std::string("certificate decode: ") + e.what());
    }
    try {
        return identity::verify_chain(chain, cfg_.trust_anchors, cfg_.now);
    } catch (const Error& e) {
        abort_with(Err::BadCertificate, std::string("chain verification: ") + e.what());
    }
}

void Session::verify_certificate_verify(const wire::CertificateVerify& cv, const crypto::Key32& peer_pk,
                                        bool peer_is_server, const Hash& transcript_hash) {
    if (cv.scheme != wire::kSigSchemeEd25519)
        abort_with(Err::DecryptError, "unsupported CertificateVerify signature scheme");
    if (cv.signature.size() != crypto::kSigLen)
        abort_with(Err::DecryptError, "CertificateVerify signature length");
    Bytes payload = certificate_verify_payload(peer_is_server, transcript_hash);
    if (!crypto::ed25519_verify(peer_pk, payload, to_array<64>(cv.signature)))
        abort_with(Err::DecryptError, "CertificateVerify signature does not verify");
}

wire::CertificateMsg Session::build_certificate(const Bytes& context, uint8_t negotiated_type) {
    if (!cfg_.credential) abort_with(Err::CertificateRequired, "no local credential available");
    const Credential& cred = *cfg_.credential;
    wire::CertificateMsg cert;
    cert.context = context;
    if (negotiated_type == vc_code_) {
        if (cred.kind != CredentialKind::vc || !cred.vc)
            abort_with(Err::CredentialTypeMismatch,
                       std::string("negotiated VC but local credential is ") + credential_kind_name(cred.kind));
        cert.entries = {identity::encode_der(*cred.vc)};
        metrics_.pk_objects_sent.signature_bytes += crypto::kSigLen; // issuer proof travels in the VC
    } else if (negotiated_type == wire::kCertTypeX509) {
        if (cred.kind != CredentialKind::x509 || cred.chain.size() < 2)
            abort_with(Err::CredentialTypeMismatch,
                       std::string("negotiated X.509 but local credential is ") + credential_kind_name(cred.kind));
        // Root CA certificate excluded from the wire.
        for (size_t i = 0; i + 1 < cred.chain.size(); ++i) {
            cert.entries.push_back(identity::cert_bytes(cred.chain[i]));
            metrics_.pk_objects_sent.public_key_bytes += crypto::kPkLen;
            metrics_.pk_objects_sent.signature_bytes += crypto::kSigLen;
        }
    } else if (negotiated_type == wire::kCertTypeRawPublicKey) {
        if (cred.kind != CredentialKind::raw_public_key)
            abort_with(Err::CredentialTypeMismatch,
                       std::string("negotiated RawPublicKey but local credential is ") +
                           credential_kind_name(cred.kind));
        cert.entries = {Bytes(cred.keys.pk.begin(), cred.keys.pk.end())};
        metrics_.pk_objects_sent.public_key_bytes += crypto::kPkLen;
    } else {
        abort_with(Err::CredentialTypeMismatch, "unsupported negotiated certificate type");
    }
    return cert;
}

wire::CertificateVerify Session::build_certificate_verify(const Hash& transcript_hash) {
    Bytes payload = certificate_verify_payload(is_server_, transcript_hash);
    crypto::Signature sig = crypto::ed25519_sign(cfg_.credential->keys.seed, payload);
    metrics_.pk_objects_sent.signature_bytes += crypto::kSigLen;
    return wire::CertificateVerify{wire::kSigSchemeEd25519, Bytes(sig.begin(), sig.end())};
}

void Session::send_application(ByteView payload) {
    if (!complete_ || failed_) throw std::logic_error("application data requires a completed handshake");
    Bytes framed = wire::seal_record(*send_keys_, wire::Record{wire::ContentType::application_data,
                                                               Bytes(payload.begin(), payload.end())});
    out_.insert(out_.end(), framed.begin(), framed.end());
}

std::vector<Bytes> Session::take_application() { return std::exchange(app_in_, {}); }

// ---------------------------------------------------------------------------
// client

ClientSession::ClientSession(EndpointConfig cfg) : Session(std::move(cfg), /*is_server=*/false) {
    bool offers_vc = contains_code(cfg_.supported_server_cert_types, vc_code_) ||
                     contains_code(cfg_.supported_client_cert_types, vc_code_);
    // Must-send rule: offering VC for server authentication requires a
    // non-empty did_methods list.
    if (contains_code(cfg_.supported_server_cert_types, vc_code_) && cfg_.did_methods.empty())
        throw Error(Err::HandshakeFailure, "client offers VC for server auth but has no did_methods");

    ephemeral_ = crypto::x25519_generate();

    wire::ClientHello hello;
    Bytes random = crypto::random_bytes(32);
    std::copy(random.begin(), random.end(), hello.random.begin());
    hello.cipher_suites = {wire::kCipherAes256GcmSha384};
    hello.extensions.push_back(wire::make_supported_versions_ch());
    hello.extensions.push_back(wire::make_signature_algorithms());
    hello.extensions.push_back(wire::make_key_share_ch(ephemeral_.pk));

    // A client whose lists are plain X.509 omits the RFC-7250 extensions
    // entirely and runs the original handshake.
    auto non_default = [&](const std::vector<uint8_t>& types) {
        return !types.empty() && !(types.size() == 1 && types[0] == wire::kCertTypeX509);
    };
    if (non_default(cfg_.supported_client_cert_types) || non_default(cfg_.supported_server_cert_types)) {
        offered_cert_types_ = true;
        if (!cfg_.supported_client_cert_types.empty())
            hello.extensions.push_back(
                wire::make_cert_type_offer(wire::kExtClientCertificateType, cfg_.supported_client_cert_types));
        if (!cfg_.supported_server_cert_types.empty())
            hello.extensions.push_back(
                wire::make_cert_type_offer(wire::kExtServerCertificateType, cfg_.supported_server_cert_types));
        if (offers_vc && !cfg_.did_methods.empty())
            hello.extensions.push_back(wire::encode_did_methods(cfg_.did_methods, did_methods_code_));
    }
    send_handshake(hello);
}

void ClientSession::process(wire::HandshakeMessage msg, const Bytes& raw) {
    switch (state_) {
    case State::expect_server_hello: {
        auto* hello = std::get_if<wire::ServerHello>(&msg);
        if (!hello) abort_with(Err::DecodeError, "expected ServerHello");
        transcript_.append(raw);
        if (hello->cipher_suite != wire::kCipherAes256GcmSha384)
            abort_with(Err::HandshakeFailure, "server selected an unsupported cipher suite");
        const wire::Extension* versions = wire::find_extension(hello->extensions, wire::kExtSupportedVersions);
        if (!versions || !wire::supported_versions_has_tls13(*versions, /*server_form=*/true))
            abort_with(Err::HandshakeFailure, "server did not select TLS 1.3");
        crypto::Key32 server_share =
            wire::parse_key_share_sh(*wire::find_extension(hello->extensions, wire::kExtKeyShare));
        schedule_.derive_handshake(crypto::x25519_shared(ephemeral_.sk, server_share), transcript_.hash());
        recv_keys_ = KeySchedule::traffic_keys(schedule_.secrets().server_handshake_traffic);
        send_keys_ = KeySchedule::traffic_keys(schedule_.secrets().client_handshake_traffic);
        state_ = State::expect_encrypted_extensions;
        return;
    }
    case State::expect_encrypted_extensions: {
        auto* ee = std::get_if<wire::EncryptedExtensions>(&msg);
        if (!ee) abort_with(Err::DecodeError, "expected EncryptedExtensions");
        transcript_.append(raw);
        const wire::Extension* sel_server = wire::find_extension(ee->extensions, wire::kExtServerCertificateType);
        const wire::Extension* sel_client = wire::find_extension(ee->extensions, wire::kExtClientCertificateType);
        const wire::Extension* methods = wire::find_extension(ee->extensions, did_methods_code_);
        if ((sel_server || sel_client || methods) && !offered_cert_types_)
            abort_with(Err::DecodeError, "unsolicited certificate-type extensions in EncryptedExtensions");
        outcome_.fallback = !sel_server && !sel_client;
        if (sel_server) {
            outcome_.server_cert_type = wire::parse_cert_type_selection(*sel_server);
            if (!contains_code(cfg_.supported_server_cert_types, outcome_.server_cert_type))
                abort_with(Err::HandshakeFailure, "server selected a server certificate type we did not offer");
        }
        if (sel_client) {
            outcome_.client_cert_type = wire::parse_cert_type_selection(*sel_client);
            if (!contains_code(cfg_.supported_client_cert_types, outcome_.client_cert_type))
                abort_with(Err::HandshakeFailure, "server selected a client certificate type we did not offer");
        }
        if (methods) outcome_.shared_did_methods = wire::decode_did_methods(*methods, did_methods_code_);
        if (outcome_.server_cert_type == vc_code_ && outcome_.shared_did_methods.empty())
            abort_with(Err::HandshakeFailure, "VC selected for server auth without shared did_methods");
        if (sel_client && outcome_.client_cert_type == vc_code_ && outcome_.shared_did_methods.empty())
            abort_with(Err::HandshakeFailure, "VC selected for client auth without shared did_methods");
        state_ = State::expect_certificate;
        return;
    }
    case State::expect_certificate: {
        if (auto* cr = std::get_if<wire::CertificateRequest>(&msg)) {
            if (client_auth_requested_) abort_with(Err::DecodeError, "duplicate CertificateRequest");
            transcript_.append(raw);
            client_auth_requested_ = true;
            certificate_request_context_ = cr->context;
            if (const wire::Extension* sel = wire::find_extension(cr->extensions, wire::kExtClientCertificateType)) {
                if (wire::parse_cert_type_selection(*sel) != outcome_.client_cert_type)
                    abort_with(Err::DecodeError, "CertificateRequest contradicts EncryptedExtensions selection");
            }
            // The endpoint authenticating with a VC checks its own DID
            // method against the shared list before it ever sends the VC.
            if (outcome_.client_cert_type == vc_code_ && cfg_.credential &&
                cfg_.credential->kind == CredentialKind::vc)
                check_own_did_in_shared(*cfg_.credential->did, outcome_.shared_did_methods, cfg_.protocol.methods);
            return;
        }
        auto* cert = std::get_if<wire::CertificateMsg>(&msg);
        if (!cert) abort_with(Err::DecodeError, "expected Certificate");
        transcript_.append(raw);
        server_pk_ = authenticate_peer_certificate(*cert, outcome_.server_cert_type);
        state_ = State::expect_certificate_verify;
        return;
    }
    case State::expect_certificate_verify: {
        auto* cv = std::get_if<wire::CertificateVerify>(&msg);
        if (!cv) abort_with(Err::DecodeError, "expected CertificateVerify");
        verify_certificate_verify(*cv, server_pk_, /*peer_is_server=*/true, transcript_.hash());
        transcript_.append(raw);
        state_ = State::expect_finished;
        return;
    }
    case State::expect_finished: {
        auto* fin = std::get_if<wire::Finished>(&msg);
        if (!fin) abort_with(Err::DecodeError, "expected Finished");
        Hash expected = KeySchedule::finished_mac(
            KeySchedule::finished_key(schedule_.secrets().server_handshake_traffic), transcript_.hash());
        if (fin->verify_data.size() != crypto::kHashLen ||
            !std::equal(expected.begin(), expected.end(), fin->verify_data.begin()))
            abort_with(Err::DecryptError, "server Finished MAC does not verify");
        transcript_.append(raw);
        schedule_.derive_application(transcript_.hash());
        recv_keys_ = KeySchedule::traffic_keys(schedule_.secrets().server_application_traffic);
        send_client_flight();
        state_ = State::done;
        return;
    }
    case State::done: abort_with(Err::DecodeError, "handshake message after completion");
    }
}

void ClientSession::send_client_flight() {
    if (client_auth_requested_) {
        if (!cfg_.credential)
            abort_with(Err::CertificateRequired, "server requested client authentication but no credential is configured");
        if (outcome_.client_cert_type == vc_code_ && cfg_.credential->kind == CredentialKind::vc)
            check_own_did_in_shared(*cfg_.credential->did, outcome_.shared_did_methods, cfg_.protocol.methods);
        send_handshake(build_certificate(certificate_request_context_, outcome_.client_cert_type));
        send_handshake(build_certificate_verify(transcript_.hash()));
    }
    Hash mac = KeySchedule::finished_mac(KeySchedule::finished_key(schedule_.secrets().client_handshake_traffic),
                                         transcript_.hash());
    send_handshake(wire::Finished{Bytes(mac.begin(), mac.end())});
    send_keys_ = KeySchedule::traffic_keys(schedule_.secrets().client_application_traffic);
    mark_complete();
}

// ---------------------------------------------------------------------------
// server

ServerSession::ServerSession(EndpointConfig cfg) : Session(std::move(cfg), /*is_server=*/true) {}

void ServerSession::process(wire::HandshakeMessage msg, const Bytes& raw) {
    switch (state_) {
    case State::expect_client_hello: {
        auto* hello = std::get_if<wire::ClientHello>(&msg);
        if (!hello) abort_with(Err::DecodeError, "expected ClientHello");
        transcript_.append(raw);
        send_server_flight(*hello);
        state_ = cfg_.request_client_auth ? State::expect_client_certificate : State::expect_client_finished;
        return;
    }
    case State::expect_client_certificate: {
        if (std::holds_alternative<wire::Finished>(msg))
            abort_with(Err::CertificateRequired, "client sent no certificate");
        auto* cert = std::get_if<wire::CertificateMsg>(&msg);
        if (!cert) abort_with(Err::DecodeError, "expected client Certificate");
        transcript_.append(raw);
        client_pk_ = authenticate_peer_certificate(*cert, outcome_.client_cert_type);
        state_ = State::expect_client_certificate_verify;
        return;
    }
    case State::expect_client_certificate_verify: {
        auto* cv = std::get_if<wire::CertificateVerify>(&msg);
        if (!cv) abort_with(Err::DecodeError, "expected client CertificateVerify");
        verify_certificate_verify(*cv, client_pk_, /*peer_is_server=*/false, transcript_.hash());
        transcript_.append(raw);
        state_ = State::expect_client_finished;
        return;
    }
    case State::expect_client_finished: {
        auto* fin = std::get_if<wire::Finished>(&msg);
        if (!fin) abort_with(Err::DecodeError, "expected client Finished");
        Hash expected = KeySchedule::finished_mac(
            KeySchedule::finished_key(schedule_.secrets().client_handshake_traffic), transcript_.hash());
        if (fin->verify_data.size() != crypto::kHashLen ||
            !std::equal(expected.begin(), expected.end(), fin->verify_data.begin()))
            abort_with(Err::DecryptError, "client Finished MAC does not verify");
        transcript_.append(raw);
        recv_keys_ = KeySchedule::traffic_keys(schedule_.secrets().client_application_traffic);
        mark_complete();
        state_ = State::done;
        return;
    }
    case State::done: abort_with(Err::DecodeError, "handshake message after completion");
    }
}

void ServerSession::send_server_flight(const wire::ClientHello& hello) {
    if (std::find(hello.cipher_suites.begin(), hello.cipher_suites.end(), wire::kCipherAes256GcmSha384) ==
        hello.cipher_suites.end())
        abort_with(Err::HandshakeFailure, "client offers no supported cipher suite");
    const wire::Extension* versions = wire::find_extension(hello.extensions, wire::kExtSupportedVersions);
    if (!versions || !wire::supported_versions_has_tls13(*versions, /*server_form=*/false))
        abort_with(Err::HandshakeFailure, "client does not offer TLS 1.3");
    const wire::Extension* sig_algs = wire::find_extension(hello.extensions, wire::kExtSignatureAlgorithms);
    if (!sig_algs || !wire::signature_algorithms_has_ed25519(*sig_algs))
        abort_with(Err::HandshakeFailure, "client does not offer Ed25519");
    std::optional<crypto::Key32> client_share =
        wire::parse_key_share_ch(*wire::find_extension(hello.extensions, wire::kExtKeyShare));
    if (!client_share) abort_with(Err::HandshakeFailure, "client offers no x25519 key share");

    ClientOffer offer;
    if (const wire::Extension* e = wire::find_extension(hello.extensions, wire::kExtClientCertificateType))
        offer.client_cert_types = wire::parse_cert_type_offer(*e);
    if (const wire::Extension* e = wire::find_extension(hello.extensions, wire::kExtServerCertificateType))
        offer.server_cert_types = wire::parse_cert_type_offer(*e);
    if (const wire::Extension* e = wire::find_extension(hello.extensions, did_methods_code_))
        offer.did_methods = wire::decode_did_methods(*e, did_methods_code_);

    // Must-send rule, receive side: VC offered for server auth obliges the
    // client to send did_methods.
    if (offer.server_cert_types && contains_code(*offer.server_cert_types, vc_code_) && !offer.did_methods)
        abort_with(Err::HandshakeFailure, "client offered VC without the did_methods extension");

    ServerPolicy policy{cfg_.supported_client_cert_types, cfg_.supported_server_cert_types, cfg_.rfc7250_enabled,
                        cfg_.request_client_auth};
    outcome_ = negotiate_cert_types(offer, policy);

    bool vc_selected = !outcome_.fallback && (outcome_.server_cert_type == vc_code_ ||
                                              (cfg_.request_client_auth && outcome_.client_cert_type == vc_code_));
    if (vc_selected) {
        outcome_.shared_did_methods =
            negotiate_did_methods(offer.did_methods.value_or(std::vector<uint16_t>{}), cfg_.did_methods);
        if (outcome_.shared_did_methods.empty())
            abort_with(Err::HandshakeFailure, "empty did_methods intersection with VC selected");
        if (outcome_.server_cert_type == vc_code_) {
            if (!cfg_.credential || cfg_.credential->kind != CredentialKind::vc)
                abort_with(Err::CredentialTypeMismatch, "VC negotiated but no VC credential configured");
            check_own_did_in_shared(*cfg_.credential->did, outcome_.shared_did_methods, cfg_.protocol.methods);
        }
    } else if (!outcome_.fallback && offer.did_methods) {
        outcome_.shared_did_methods = negotiate_did_methods(*offer.did_methods, cfg_.did_methods);
    }

    wire::ServerHello sh;
    Bytes random = crypto::random_bytes(32);
    std::copy(random.begin(), random.end(), sh.random.begin());
    sh.cipher_suite = wire::kCipherAes256GcmSha384;
    crypto::X25519KeyPair ephemeral = crypto::x25519_generate();
    sh.extensions.push_back(wire::make_supported_versions_sh());
    sh.extensions.push_back(wire::make_key_share_sh(ephemeral.pk));
    send_handshake(sh);
    schedule_.derive_handshake(crypto::x25519_shared(ephemeral.sk, *client_share), transcript_.hash());
    send_keys_ = KeySchedule::traffic_keys(schedule_.secrets().server_handshake_traffic);
    recv_keys_ = KeySchedule::traffic_keys(schedule_.secrets().client_handshake_traffic);

    wire::EncryptedExtensions ee;
    if (!outcome_.fallback) {
        if (offer.server_cert_types)
            ee.extensions.push_back(
                wire::make_cert_type_selection(wire::kExtServerCertificateType, outcome_.server_cert_type));
        if (cfg_.request_client_auth && offer.client_cert_types)
            ee.extensions.push_back(
                wire::make_cert_type_selection(wire::kExtClientCertificateType, outcome_.client_cert_type));
        if (offer.did_methods && !outcome_.shared_did_methods.empty())
            ee.extensions.push_back(wire::encode_did_methods(outcome_.shared_did_methods, did_methods_code_));
    }
    send_handshake(ee);

    if (cfg_.request_client_auth) {
        wire::CertificateRequest cr;
        cr.extensions.push_back(wire::make_signature_algorithms());
        if (!outcome_.fallback && offer.client_cert_types)
            cr.extensions.push_back(
                wire::make_cert_type_selection(wire::kExtClientCertificateType, outcome_.client_cert_type));
        send_handshake(cr);
    }

    send_handshake(build_certificate({}, outcome_.fallback ? wire::kCertTypeX509 : outcome_.server_cert_type));
    send_handshake(build_certificate_verify(transcript_.hash()));
    Hash mac = KeySchedule::finished_mac(KeySchedule::finished_key(schedule_.secrets().server_handshake_traffic),
                                         transcript_.hash());
    send_handshake(wire::Finished{Bytes(mac.begin(), mac.end())});
    schedule_.derive_application(transcript_.hash());
    send_keys_ = KeySchedule::traffic_keys(schedule_.secrets().server_application_traffic);
}

} // namespace vctls::handshake
