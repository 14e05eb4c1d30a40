// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/identity/encoding.hpp"

#include <sstream>

namespace vctls::identity {

namespace {

constexpr const char* kVcLabel = "VC";
constexpr const char* kDocLabel = "DID DOCUMENT";
constexpr char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

Bytes with_length_prefix(ByteView body) {
    ByteWriter w;
    w.u32(static_cast<uint32_t>(body.size()));
    w.raw(body);
    return w.take();
}

Bytes strip_length_prefix(ByteView der) {
    if (der.size() < 4) raise(Err::Truncated, "DER shorter than length prefix");
    ByteReader r(der);
    uint32_t len = r.u32();
    if (r.remaining() != len) raise(Err::Truncated, "DER length prefix mismatch");
    ByteView body = r.raw(len);
    return Bytes(body.begin(), body.end());
}

std::string armor(const std::string& label, ByteView der) {
    std::string b64 = base64_encode(der);
    std::ostringstream out;
    out << "-----BEGIN " << label << "-----\n";
    for (size_t i = 0; i < b64.size(); i += 64) out << b64.substr(i, 64) << "\n";
    out << "-----END " << label << "-----\n";
    return out.str();
}

Bytes dearmor(const std::string& pem, const std::string& expected_label) {
    size_t begin = pem.find("-----BEGIN ");
    if (begin == std::string::npos) raise(Err::BadArmor, "missing BEGIN line");
    size_t label_start = begin + 11;
    size_t label_end = pem.find("-----", label_start);
    if (label_end == std::string::npos) raise(Err::BadArmor, "unterminated BEGIN line");
    std::string label = pem.substr(label_start, label_end - label_start);
    if (label != expected_label)
        raise(Err::LabelMismatch, "expected " + expected_label + ", found " + label);
    size_t body_start = label_end + 5;
    std::string end_marker = "-----END " + label + "-----";
    size_t body_end = pem.find(end_marker, body_start);
    if (body_end == std::string::npos) raise(Err::BadArmor, "missing END line");
    std::string b64;
    for (size_t i = body_start; i < body_end; ++i) {
        char c = pem[i];
        if (c == '\n' || c == '\r' || c == ' ') continue;
        b64.push_back(c);
    }
    return base64_decode(b64);
}

} // namespace

std::string base64_encode(ByteView data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    size_t i = 0;
    while (i + 3 <= data.size()) {
        uint32_t v = data[i] << 16 | data[i + 1] << 8 | data[i + 2];
        out.push_back(kB64[v >> 18 & 63]);
        out.push_back(kB64[v >> 12 & 63]);
        out.push_back(kB64[v >> 6 & 63]);
        out.push_back(kB64[v & 63]);
        i += 3;
    }
    size_t rest = data.size() - i;
    if (rest == 1) {
        uint32_t v = data[i] << 16;
        out.push_back(kB64[v >> 18 & 63]);
        out.push_back(kB64[v >> 12 & 63]);
        out.append("==");
    } else if (rest == 2) {
        uint32_t v = data[i] << 16 | data[i + 1] << 8;
        out.push_back(kB64[v >> 18 & 63]);
        out.push_back(kB64[v >> 12 & 63]);
        out.push_back(kB64[v >> 6 & 63]);
        out.push_back('=');
    }
    return out;
}

Bytes base64_decode(const std::string& text) {
    auto value_of = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    if (text.size() % 4 != 0) raise(Err::BadArmor, "base64 body length not a multiple of 4");
    Bytes out;
    out.reserve(text.size() / 4 * 3);
    for (size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        uint32_t v = 0;
        for (size_t k = 0; k < 4; ++k) {
            char c = text[i + k];
            if (c == '=') {
                if (i + 4 != text.size() || k < 2) raise(Err::BadArmor, "misplaced base64 padding");
                pad++;
                v <<= 6;
                continue;
            }
            if (pad > 0) raise(Err::BadArmor, "data after base64 padding");
            int d = value_of(c);
            if (d < 0) raise(Err::BadArmor, "invalid base64 character");
            v = v << 6 | static_cast<uint32_t>(d);
        }
        out.push_back(static_cast<uint8_t>(v >> 16));
        if (pad < 2) out.push_back(static_cast<uint8_t>(v >> 8));
        if (pad < 1) out.push_back(static_cast<uint8_t>(v));
    }
    return out;
}

Bytes encode_der(const VerifiableCredential& vc) {
    std::string s = vc_to_json(vc, /*include_proof=*/true).dump();
    return with_length_prefix(Bytes(s.begin(), s.end()));
}

VerifiableCredential vc_from_der(ByteView der) {
    Bytes body = strip_length_prefix(der);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body.begin(), body.end());
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("credential parse: ") + e.what());
    }
    return vc_from_json(j);
}

Bytes encode_der(const DidDocument& doc) { return with_length_prefix(canonical_bytes(doc)); }

DidDocument document_from_der(ByteView der) { return document_from_bytes(strip_length_prefix(der)); }

std::string encode_pem(const VerifiableCredential& vc) { return armor(kVcLabel, encode_der(vc)); }

std::string encode_pem(const DidDocument& doc) { return armor(kDocLabel, encode_der(doc)); }

VerifiableCredential vc_from_pem(const std::string& pem) { return vc_from_der(dearmor(pem, kVcLabel)); }

DidDocument document_from_pem(const std::string& pem) { return document_from_der(dearmor(pem, kDocLabel)); }

} // namespace vctls::identity
