// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Record layer: 3-byte framing (content type + length) with AES-256-GCM
// protection for everything after the hellos. Sealed records carry the
// real content type as the last plaintext byte, TLS 1.3 style; the outer
// type is always application_data and the header is authenticated as AAD.

#pragma once

#include <optional>

#include "vctls/bytes.hpp"
#include "vctls/crypto.hpp"

namespace vctls::wire {

enum class ContentType : uint8_t {
    alert = 21,
    handshake = 22,
    application_data = 23,
};

inline constexpr size_t kMaxRecordPayload = 1 << 14;
inline constexpr size_t kRecordHeaderLen = 3;

struct Record {
    ContentType content_type = ContentType::handshake;
    Bytes payload;
    bool operator==(const Record&) const = default;
};

struct TrafficKeys {
    crypto::Key32 key{};
    crypto::Iv iv{};
    uint64_t sequence = 0;
};

// Plaintext framing for the hello flight and pre-key alerts.
Bytes frame_plaintext(const Record& rec); // PayloadTooLarge

// AEAD-protected record; increments keys.sequence. Nonce = IV XOR sequence.
Bytes seal_record(TrafficKeys& keys, const Record& rec);           // PayloadTooLarge
Record open_record(TrafficKeys& keys, ByteView framed);            // AuthTagMismatch, Truncated

// Splits a byte stream into complete framed records (header included).
class RecordReader {
public:
    void feed(ByteView data);
    std::optional<Bytes> next(); // DecodeError on oversized frames
    size_t buffered() const { return buf_.size(); }

private:
    Bytes buf_;
};

ContentType frame_content_type(ByteView framed); // Truncated

} // namespace vctls::wire
