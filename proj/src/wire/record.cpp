// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/wire/record.hpp"

namespace vctls::wire {

namespace {

bool valid_content_type(uint8_t t) {
    return t == static_cast<uint8_t>(ContentType::alert) || t == static_cast<uint8_t>(ContentType::handshake) ||
           t == static_cast<uint8_t>(ContentType::application_data);
}

Bytes header_for(ContentType type, size_t len) {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(type));
    w.u16(static_cast<uint16_t>(len));
    return w.take();
}

crypto::Iv nonce_for(const TrafficKeys& keys) {
    crypto::Iv nonce = keys.iv;
    uint64_t seq = keys.sequence;
    for (int i = 0; i < 8; ++i) nonce[crypto::kIvLen - 1 - i] ^= static_cast<uint8_t>(seq >> (8 * i));
    return nonce;
}

} // namespace

Bytes frame_plaintext(const Record& rec) {
    if (rec.payload.size() > kMaxRecordPayload) raise(Err::PayloadTooLarge, "record payload");
    Bytes out = header_for(rec.content_type, rec.payload.size());
    out.insert(out.end(), rec.payload.begin(), rec.payload.end());
    return out;
}

Bytes seal_record(TrafficKeys& keys, const Record& rec) {
    if (rec.payload.size() > kMaxRecordPayload) raise(Err::PayloadTooLarge, "record payload");
    if (keys.sequence == UINT64_MAX) raise(Err::PayloadTooLarge, "sequence number exhausted");
    Bytes inner = rec.payload;
    inner.push_back(static_cast<uint8_t>(rec.content_type));
    Bytes header = header_for(ContentType::application_data, inner.size() + crypto::kTagLen);
    Bytes ciphertext = crypto::aead_seal(keys.key, nonce_for(keys), header, inner);
    keys.sequence += 1;
    Bytes out = std::move(header);
    out.insert(out.end(), ciphertext.begin(), ciphertext.end());
    return out;
}

Record open_record(TrafficKeys& keys, ByteView framed) {
    if (framed.size() < kRecordHeaderLen) raise(Err::Truncated, "record header");
    ByteView header = framed.first(kRecordHeaderLen);
    ByteView ciphertext = framed.subspan(kRecordHeaderLen);
    size_t claimed = static_cast<size_t>(header[1]) << 8 | header[2];
    if (claimed != ciphertext.size()) raise(Err::Truncated, "record length");
    Bytes inner = crypto::aead_open(keys.key, nonce_for(keys), header, ciphertext);
    keys.sequence += 1;
    if (inner.empty() || !valid_content_type(inner.back()))
        raise(Err::AuthTagMismatch, "sealed record has no valid inner content type");
    Record rec;
    rec.content_type = static_cast<ContentType>(inner.back());
    inner.pop_back();
    rec.payload = std::move(inner);
    return rec;
}

void RecordReader::feed(ByteView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

std::optional<Bytes> RecordReader::next() {
    if (buf_.size() < kRecordHeaderLen) return std::nullopt;
    if (!valid_content_type(buf_[0])) raise(Err::DecodeError, "unknown record content type");
    size_t len = static_cast<size_t>(buf_[1]) << 8 | buf_[2];
    if (len > kMaxRecordPayload + 1 + crypto::kTagLen) raise(Err::DecodeError, "record too large");
    if (buf_.size() < kRecordHeaderLen + len) return std::nullopt;
    Bytes frame(buf_.begin(), buf_.begin() + kRecordHeaderLen + len);
    buf_.erase(buf_.begin(), buf_.begin() + kRecordHeaderLen + len);
    return frame;
}

ContentType frame_content_type(ByteView framed) {
    if (framed.empty()) raise(Err::Truncated, "record header");
    return static_cast<ContentType>(framed[0]);
}

} // namespace vctls::wire
