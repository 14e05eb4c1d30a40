// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/handshake/key_schedule.hpp"

namespace vctls::handshake {

namespace {

const Hash& zero_hash() {
    static const Hash z{};
    return z;
}

Hash empty_transcript_hash() { return crypto::sha384({}); }

Hash extract(ByteView salt, ByteView ikm) { return crypto::hkdf_extract_sha384(salt, ikm); }

} // namespace

Bytes hkdf_expand_label(const Hash& secret, std::string_view label, ByteView context, size_t out_len) {
    ByteWriter info;
    info.u16(static_cast<uint16_t>(out_len));
    std::string full_label = "tls13 " + std::string(label);
    info.vec(to_bytes(full_label), 1, "hkdf label");
    info.vec(context, 1, "hkdf context");
    return crypto::hkdf_expand_sha384(secret, info.bytes(), out_len);
}

Hash derive_secret(const Hash& secret, std::string_view label, const Hash& transcript_hash) {
    return to_array<crypto::kHashLen>(hkdf_expand_label(secret, label, transcript_hash, crypto::kHashLen));
}

void KeySchedule::derive_handshake(const crypto::Key32& ecdhe_shared, const Hash& hello_hash) {
    Hash early = extract({}, zero_hash());
    Hash derived_early = derive_secret(early, "derived", empty_transcript_hash());
    secrets_.handshake_secret = extract(derived_early, ecdhe_shared);
    secrets_.client_handshake_traffic = derive_secret(secrets_.handshake_secret, "c hs traffic", hello_hash);
    secrets_.server_handshake_traffic = derive_secret(secrets_.handshake_secret, "s hs traffic", hello_hash);
    Hash derived_hs = derive_secret(secrets_.handshake_secret, "derived", empty_transcript_hash());
    secrets_.master_secret = extract(derived_hs, zero_hash());
    handshake_ready_ = true;
}

void KeySchedule::derive_application(const Hash& finished_hash) {
    secrets_.client_application_traffic = derive_secret(secrets_.master_secret, "c ap traffic", finished_hash);
    secrets_.server_application_traffic = derive_secret(secrets_.master_secret, "s ap traffic", finished_hash);
    application_ready_ = true;
}

wire::TrafficKeys KeySchedule::traffic_keys(const Hash& traffic_secret) {
    wire::TrafficKeys keys;
    keys.key = to_array<crypto::kKeyLen>(hkdf_expand_label(traffic_secret, "key", {}, crypto::kKeyLen));
    keys.iv = to_array<crypto::kIvLen>(hkdf_expand_label(traffic_secret, "iv", {}, crypto::kIvLen));
    keys.sequence = 0;
    return keys;
}

Hash KeySchedule::finished_key(const Hash& traffic_secret) {
    return to_array<crypto::kHashLen>(hkdf_expand_label(traffic_secret, "finished", {}, crypto::kHashLen));
}

Hash KeySchedule::finished_mac(const Hash& fin_key, const Hash& transcript_hash) {
    return crypto::hmac_sha384(fin_key, transcript_hash);
}

Bytes certificate_verify_payload(bool server, const Hash& transcript_hash) {
    Bytes payload(64, 0x20);
    std::string context = server ? "TLS 1.3, server CertificateVerify" : "TLS 1.3, client CertificateVerify";
    payload.insert(payload.end(), context.begin(), context.end());
    payload.push_back(0x00);
    payload.insert(payload.end(), transcript_hash.begin(), transcript_hash.end());
    return payload;
}

} // namespace vctls::handshake
