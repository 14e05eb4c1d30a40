// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// TLS 1.3 key schedule with HKDF-SHA-384: extract/expand chain producing
// handshake traffic secrets at ServerHello and application traffic
// secrets at the server Finished.

#pragma once

#include <string_view>

#include "vctls/crypto.hpp"
#include "vctls/wire/record.hpp"

namespace vctls::handshake {

using crypto::Hash;

// Running SHA-384 over the exact encoded bytes of every handshake message
// exchanged so far, in order.
class Transcript {
public:
    void append(ByteView message_bytes) { digest_.update(message_bytes); }
    Hash hash() const { return digest_.digest(); }

private:
    crypto::Sha384 digest_;
};

Bytes hkdf_expand_label(const Hash& secret, std::string_view label, ByteView context, size_t out_len);
Hash derive_secret(const Hash& secret, std::string_view label, const Hash& transcript_hash);

struct SessionSecrets {
    Hash handshake_secret{};
    Hash master_secret{};
    Hash client_handshake_traffic{};
    Hash server_handshake_traffic{};
    Hash client_application_traffic{};
    Hash server_application_traffic{};
    bool operator==(const SessionSecrets&) const = default;
};

class KeySchedule {
public:
    // hello_hash: transcript hash through ServerHello.
    void derive_handshake(const crypto::Key32& ecdhe_shared, const Hash& hello_hash);
    // finished_hash: transcript hash through the server Finished.
    void derive_application(const Hash& finished_hash);

    bool handshake_ready() const { return handshake_ready_; }
    bool application_ready() const { return application_ready_; }
    const SessionSecrets& secrets() const { return secrets_; }

    static wire::TrafficKeys traffic_keys(const Hash& traffic_secret);
    static Hash finished_key(const Hash& traffic_secret);
    static Hash finished_mac(const Hash& finished_key, const Hash& transcript_hash);

private:
    SessionSecrets secrets_;
    bool handshake_ready_ = false;
    bool application_ready_ = false;
};

// 64 bytes of 0x20, the context string, a zero byte, then the transcript
// hash — the payload actually signed in CertificateVerify.
Bytes certificate_verify_payload(bool server, const Hash& transcript_hash);

} // namespace vctls::handshake
