// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/wire/codec.hpp"

#include <algorithm>
#include <set>

namespace vctls::wire {

namespace {

void write_extensions(ByteWriter& w, const std::vector<Extension>& exts) {
    ByteWriter inner;
    for (const Extension& e : exts) {
        inner.u16(e.extension_type);
        inner.vec(e.extension_data, 2, "extension_data");
    }
    w.vec(inner.bytes(), 2, "extensions");
}

std::vector<Extension> read_extensions(ByteReader& r) {
    Bytes blob = r.vec(2);
    ByteReader er(blob);
    std::vector<Extension> exts;
    while (!er.empty()) {
        Extension e;
        e.extension_type = er.u16();
        e.extension_data = er.vec(2);
        exts.push_back(std::move(e));
    }
    return exts;
}

void require_extensions(const std::vector<Extension>& exts, std::initializer_list<uint16_t> types,
                        const char* where) {
    for (uint16_t t : types) {
        if (!find_extension(exts, t))
            raise(Err::MissingMandatoryExtension,
                  std::string(where) + " lacks extension " + std::to_string(t));
    }
}

void check_client_hello(const ClientHello& ch) {
    if (ch.cipher_suites.empty()) raise(Err::VectorBoundViolation, "cipher_suites empty");
    require_extensions(ch.extensions, {kExtKeyShare, kExtSupportedVersions, kExtSignatureAlgorithms},
                       "ClientHello");
}

void check_server_hello(const ServerHello& sh) {
    require_extensions(sh.extensions, {kExtKeyShare, kExtSupportedVersions}, "ServerHello");
}

void encode_body(ByteWriter& w, const ClientHello& m) {
    check_client_hello(m);
    w.raw(m.random);
    ByteWriter suites;
    for (uint16_t cs : m.cipher_suites) suites.u16(cs);
    w.vec(suites.bytes(), 2, "cipher_suites");
    write_extensions(w, m.extensions);
}

void encode_body(ByteWriter& w, const ServerHello& m) {
    check_server_hello(m);
    w.raw(m.random);
    w.u16(m.cipher_suite);
    write_extensions(w, m.extensions);
}

void encode_body(ByteWriter& w, const EncryptedExtensions& m) { write_extensions(w, m.extensions); }

void encode_body(ByteWriter& w, const CertificateRequest& m) {
    w.vec(m.context, 1, "certificate_request_context");
    write_extensions(w, m.extensions);
}

void encode_body(ByteWriter& w, const CertificateMsg& m) {
    if (m.entries.empty()) raise(Err::VectorBoundViolation, "certificate list empty");
    w.vec(m.context, 1, "certificate_request_context");
    ByteWriter list;
    for (const Bytes& entry : m.entries) {
        if (entry.empty()) raise(Err::VectorBoundViolation, "certificate entry empty");
        list.vec(entry, 3, "cert_data");
        list.u16(0); // entry extensions, always empty in this artifact
    }
    w.vec(list.bytes(), 3, "certificate_list");
}

void encode_body(ByteWriter& w, const CertificateVerify& m) {
    w.u16(m.scheme);
    w.vec(m.signature, 2, "signature");
}

void encode_body(ByteWriter& w, const Finished& m) {
    if (m.verify_data.empty()) raise(Err::VectorBoundViolation, "finished verify_data empty");
    w.raw(m.verify_data);
}

HandshakeMessage decode_body(MsgType type, ByteReader& r) {
    switch (type) {
    case MsgType::client_hello: {
        ClientHello m;
        m.random = to_array<32>(r.raw(32));
        Bytes suites = r.vec(2);
        if (suites.empty() || suites.size() % 2 != 0) raise(Err::VectorBoundViolation, "cipher_suites");
        ByteReader sr(suites);
        while (!sr.empty()) m.cipher_suites.push_back(sr.u16());
        m.extensions = read_extensions(r);
        check_client_hello(m);
        return m;
    }
    case MsgType::server_hello: {
        ServerHello m;
        m.random = to_array<32>(r.raw(32));
        m.cipher_suite = r.u16();
        m.extensions = read_extensions(r);
        check_server_hello(m);
        return m;
    }
    case MsgType::encrypted_extensions: {
        EncryptedExtensions m;
        m.extensions = read_extensions(r);
        return m;
    }
    case MsgType::certificate_request: {
        CertificateRequest m;
        m.context = r.vec(1);
        m.extensions = read_extensions(r);
        return m;
    }
    case MsgType::certificate: {
        CertificateMsg m;
        m.context = r.vec(1);
        Bytes list = r.vec(3);
        ByteReader lr(list);
        while (!lr.empty()) {
            Bytes entry = lr.vec(3);
            if (entry.empty()) raise(Err::VectorBoundViolation, "certificate entry empty");
            uint16_t ext_len = lr.u16();
            if (ext_len != 0) raise(Err::VectorBoundViolation, "certificate entry extensions unsupported");
            m.entries.push_back(std::move(entry));
        }
        if (m.entries.empty()) raise(Err::VectorBoundViolation, "certificate list empty");
        return m;
    }
    case MsgType::certificate_verify: {
        CertificateVerify m;
        m.scheme = r.u16();
        m.signature = r.vec(2);
        return m;
    }
    case MsgType::finished: {
        Finished m;
        if (r.empty()) raise(Err::VectorBoundViolation, "finished verify_data empty");
        ByteView rest = r.raw(r.remaining());
        m.verify_data.assign(rest.begin(), rest.end());
        return m;
    }
    }
    raise(Err::UnknownMessageType, "message type " + std::to_string(static_cast<int>(type)));
}

bool known_msg_type(uint8_t t) {
    switch (static_cast<MsgType>(t)) {
    case MsgType::client_hello:
    case MsgType::server_hello:
    case MsgType::encrypted_extensions:
    case MsgType::certificate:
    case MsgType::certificate_request:
    case MsgType::certificate_verify:
    case MsgType::finished: return true;
    }
    return false;
}

} // namespace

MsgType msg_type_of(const HandshakeMessage& msg) {
    return std::visit(
        [](const auto& m) -> MsgType {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ClientHello>) return MsgType::client_hello;
            else if constexpr (std::is_same_v<T, ServerHello>) return MsgType::server_hello;
            else if constexpr (std::is_same_v<T, EncryptedExtensions>) return MsgType::encrypted_extensions;
            else if constexpr (std::is_same_v<T, CertificateRequest>) return MsgType::certificate_request;
            else if constexpr (std::is_same_v<T, CertificateMsg>) return MsgType::certificate;
            else if constexpr (std::is_same_v<T, CertificateVerify>) return MsgType::certificate_verify;
            else return MsgType::finished;
        },
        msg);
}

Bytes encode_message(const HandshakeMessage& msg) {
    ByteWriter body;
    std::visit([&](const auto& m) { encode_body(body, m); }, msg);
    ByteWriter w;
    w.u8(static_cast<uint8_t>(msg_type_of(msg)));
    w.vec(body.bytes(), 3, "handshake body");
    return w.take();
}

HandshakeMessage decode_message(ByteView bytes) {
    ByteReader r(bytes);
    uint8_t type = r.u8();
    if (!known_msg_type(type)) raise(Err::UnknownMessageType, "message type " + std::to_string(type));
    uint32_t len = r.u24();
    if (r.remaining() < len) raise(Err::Truncated, "handshake body");
    if (r.remaining() > len) raise(Err::VectorBoundViolation, "trailing bytes after handshake message");
    ByteReader body(r.raw(len));
    HandshakeMessage msg = decode_body(static_cast<MsgType>(type), body);
    body.expect_end("handshake body");
    return msg;
}

Extension encode_did_methods(const std::vector<uint16_t>& methods, uint16_t extension_type) {
    if (methods.empty()) raise(Err::EmptyList, "did_methods");
    if (methods.size() > 32767) raise(Err::FieldTooLong, "did_methods");
    ByteWriter codes;
    for (uint16_t m : methods) codes.u16(m);
    ByteWriter w;
    w.vec(codes.bytes(), 2, "did_methods");
    return Extension{extension_type, w.take()};
}

std::vector<uint16_t> decode_did_methods(const Extension& ext, uint16_t extension_type) {
    if (ext.extension_type != extension_type)
        throw std::invalid_argument("extension is not did_methods");
    ByteReader r(ext.extension_data);
    uint16_t len = r.u16();
    if (len % 2 != 0) raise(Err::OddLength, "did_methods vector length " + std::to_string(len));
    if (len == 0) raise(Err::EmptyList, "did_methods");
    if (len != r.remaining()) raise(Err::LengthMismatch, "did_methods length prefix");
    std::vector<uint16_t> methods;
    std::set<uint16_t> seen;
    while (!r.empty()) {
        uint16_t code = r.u16();
        if (seen.insert(code).second) methods.push_back(code);
    }
    return methods;
}

const Extension* find_extension(const std::vector<Extension>& exts, uint16_t type) {
    auto it = std::find_if(exts.begin(), exts.end(),
                           [type](const Extension& e) { return e.extension_type == type; });
    return it == exts.end() ? nullptr : &*it;
}

Extension make_supported_versions_ch() {
    ByteWriter w;
    w.u8(2);
    w.u16(kTls13Version);
    return Extension{kExtSupportedVersions, w.take()};
}

Extension make_supported_versions_sh() {
    ByteWriter w;
    w.u16(kTls13Version);
    return Extension{kExtSupportedVersions, w.take()};
}

bool supported_versions_has_tls13(const Extension& ext, bool server_form) {
    ByteReader r(ext.extension_data);
    if (server_form) return r.u16() == kTls13Version && r.empty();
    uint8_t len = r.u8();
    if (len % 2 != 0 || len != r.remaining()) return false;
    while (!r.empty())
        if (r.u16() == kTls13Version) return true;
    return false;
}

Extension make_signature_algorithms() {
    ByteWriter w;
    w.u16(2);
    w.u16(kSigSchemeEd25519);
    return Extension{kExtSignatureAlgorithms, w.take()};
}

bool signature_algorithms_has_ed25519(const Extension& ext) {
    ByteReader r(ext.extension_data);
    uint16_t len = r.u16();
    if (len % 2 != 0 || len != r.remaining()) return false;
    while (!r.empty())
        if (r.u16() == kSigSchemeEd25519) return true;
    return false;
}

Extension make_key_share_ch(const crypto::Key32& x25519_pk) {
    ByteWriter entry;
    entry.u16(kGroupX25519);
    entry.vec(x25519_pk, 2, "key_exchange");
    ByteWriter w;
    w.vec(entry.bytes(), 2, "client_shares");
    return Extension{kExtKeyShare, w.take()};
}

Extension make_key_share_sh(const crypto::Key32& x25519_pk) {
    ByteWriter w;
    w.u16(kGroupX25519);
    w.vec(x25519_pk, 2, "key_exchange");
    return Extension{kExtKeyShare, w.take()};
}

std::optional<crypto::Key32> parse_key_share_ch(const Extension& ext) {
    ByteReader r(ext.extension_data);
    Bytes shares = r.vec(2);
    r.expect_end("key_share");
    ByteReader sr(shares);
    while (!sr.empty()) {
        uint16_t group = sr.u16();
        Bytes key = sr.vec(2);
        if (group == kGroupX25519) {
            if (key.size() != crypto::kPkLen) raise(Err::VectorBoundViolation, "x25519 share length");
            return to_array<32>(key);
        }
    }
    return std::nullopt;
}

crypto::Key32 parse_key_share_sh(const Extension& ext) {
    ByteReader r(ext.extension_data);
    uint16_t group = r.u16();
    Bytes key = r.vec(2);
    r.expect_end("key_share");
    if (group != kGroupX25519 || key.size() != crypto::kPkLen)
        raise(Err::VectorBoundViolation, "server key_share is not a x25519 share");
    return to_array<32>(key);
}

Extension make_cert_type_offer(uint16_t extension_type, const std::vector<uint8_t>& types) {
    if (types.empty()) raise(Err::EmptyList, "certificate type offer");
    ByteWriter w;
    w.vec(types, 1, "certificate types");
    return Extension{extension_type, w.take()};
}

std::vector<uint8_t> parse_cert_type_offer(const Extension& ext) {
    ByteReader r(ext.extension_data);
    Bytes types = r.vec(1);
    r.expect_end("certificate type offer");
    if (types.empty()) raise(Err::EmptyList, "certificate type offer");
    return types;
}

Extension make_cert_type_selection(uint16_t extension_type, uint8_t type) {
    return Extension{extension_type, Bytes{type}};
}

uint8_t parse_cert_type_selection(const Extension& ext) {
    if (ext.extension_data.size() != 1) raise(Err::LengthMismatch, "certificate type selection");
    return ext.extension_data[0];
}

} // namespace vctls::wire
