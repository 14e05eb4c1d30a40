// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Encoder/decoder for handshake messages and extensions in TLS
// presentation-language layout: 1-byte message type, 3-byte length,
// big-endian vectors with explicit length prefixes throughout.

#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "vctls/bytes.hpp"
#include "vctls/crypto.hpp"

namespace vctls::wire {

enum class MsgType : uint8_t {
    client_hello = 1,
    server_hello = 2,
    encrypted_extensions = 8,
    certificate = 11,
    certificate_request = 13,
    certificate_verify = 15,
    finished = 20,
};

// Registered certificate-type code points (RFC 7250) plus the VC type,
// which defaults to 240 and is configurable.
inline constexpr uint8_t kCertTypeX509 = 0;
inline constexpr uint8_t kCertTypeRawPublicKey = 2;

inline constexpr uint16_t kExtSignatureAlgorithms = 13;
inline constexpr uint16_t kExtClientCertificateType = 19;
inline constexpr uint16_t kExtServerCertificateType = 20;
inline constexpr uint16_t kExtSupportedVersions = 43;
inline constexpr uint16_t kExtKeyShare = 51;

inline constexpr uint16_t kTls13Version = 0x0304;
inline constexpr uint16_t kCipherAes256GcmSha384 = 0x1302;
inline constexpr uint16_t kGroupX25519 = 0x001d;
inline constexpr uint16_t kSigSchemeEd25519 = 0x0807;

struct Extension {
    uint16_t extension_type = 0;
    Bytes extension_data;
    bool operator==(const Extension&) const = default;
};

struct ClientHello {
    std::array<uint8_t, 32> random{};
    std::vector<uint16_t> cipher_suites;
    std::vector<Extension> extensions;
    bool operator==(const ClientHello&) const = default;
};

struct ServerHello {
    std::array<uint8_t, 32> random{};
    uint16_t cipher_suite = 0;
    std::vector<Extension> extensions;
    bool operator==(const ServerHello&) const = default;
};

struct EncryptedExtensions {
    std::vector<Extension> extensions;
    bool operator==(const EncryptedExtensions&) const = default;
};

struct CertificateRequest {
    Bytes context;
    std::vector<Extension> extensions;
    bool operator==(const CertificateRequest&) const = default;
};

struct CertificateMsg {
    Bytes context;
    std::vector<Bytes> entries; // opaque cert_data, one or more, each 1..2^24-1 bytes
    bool operator==(const CertificateMsg&) const = default;
};

struct CertificateVerify {
    uint16_t scheme = kSigSchemeEd25519;
    Bytes signature;
    bool operator==(const CertificateVerify&) const = default;
};

struct Finished {
    Bytes verify_data;
    bool operator==(const Finished&) const = default;
};

using HandshakeMessage = std::variant<ClientHello, ServerHello, EncryptedExtensions, CertificateRequest,
                                      CertificateMsg, CertificateVerify, Finished>;

MsgType msg_type_of(const HandshakeMessage& msg);

Bytes encode_message(const HandshakeMessage& msg);         // FieldTooLong, MissingMandatoryExtension
HandshakeMessage decode_message(ByteView bytes);           // Truncated, UnknownMessageType, VectorBoundViolation

// did_methods extension: extension_data = 2-byte vector length followed by
// 2-byte big-endian method codes.
Extension encode_did_methods(const std::vector<uint16_t>& methods, uint16_t extension_type); // EmptyList
std::vector<uint16_t> decode_did_methods(const Extension& ext, uint16_t extension_type);     // OddLength, EmptyList, LengthMismatch

const Extension* find_extension(const std::vector<Extension>& exts, uint16_t type);

Extension make_supported_versions_ch();
Extension make_supported_versions_sh();
bool supported_versions_has_tls13(const Extension& ext, bool server_form);
Extension make_signature_algorithms();
bool signature_algorithms_has_ed25519(const Extension& ext);
Extension make_key_share_ch(const crypto::Key32& x25519_pk);
Extension make_key_share_sh(const crypto::Key32& x25519_pk);
std::optional<crypto::Key32> parse_key_share_ch(const Extension& ext); // x25519 share, if offered
crypto::Key32 parse_key_share_sh(const Extension& ext);

// RFC 7250 shapes: the client offers an ordered list, the server answers
// with a single selected code.
Extension make_cert_type_offer(uint16_t extension_type, const std::vector<uint8_t>& types);
std::vector<uint8_t> parse_cert_type_offer(const Extension& ext);
Extension make_cert_type_selection(uint16_t extension_type, uint8_t type);
uint8_t parse_cert_type_selection(const Extension& ext);

} // namespace vctls::wire
