// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vctls/errors.hpp"

namespace vctls {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(const std::string& hex); // throws SchemaViolation on bad input

inline Bytes to_bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }
inline std::string to_string(ByteView b) { return std::string(b.begin(), b.end()); }

template <size_t N>
std::array<uint8_t, N> to_array(ByteView b) {
    if (b.size() != N)
        raise(Err::SchemaViolation, "expected " + std::to_string(N) + " bytes, got " + std::to_string(b.size()));
    std::array<uint8_t, N> out{};
    std::copy(b.begin(), b.end(), out.begin());
    return out;
}

// Big-endian writer for the TLS presentation language.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v) {
        buf_.push_back(static_cast<uint8_t>(v >> 8));
        buf_.push_back(static_cast<uint8_t>(v));
    }
    void u24(uint32_t v) {
        buf_.push_back(static_cast<uint8_t>(v >> 16));
        buf_.push_back(static_cast<uint8_t>(v >> 8));
        buf_.push_back(static_cast<uint8_t>(v));
    }
    void u32(uint32_t v) {
        u16(static_cast<uint16_t>(v >> 16));
        u16(static_cast<uint16_t>(v));
    }
    void u64(uint64_t v) {
        u32(static_cast<uint32_t>(v >> 32));
        u32(static_cast<uint32_t>(v));
    }
    void raw(ByteView b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

    // opaque data<0..2^(8*len_bytes)-1>
    void vec(ByteView b, int len_bytes, const char* field) {
        uint64_t max = (uint64_t{1} << (8 * len_bytes)) - 1;
        if (b.size() > max) raise(Err::FieldTooLong, field);
        switch (len_bytes) {
        case 1: u8(static_cast<uint8_t>(b.size())); break;
        case 2: u16(static_cast<uint16_t>(b.size())); break;
        case 3: u24(static_cast<uint32_t>(b.size())); break;
        default: u32(static_cast<uint32_t>(b.size())); break;
        }
        raw(b);
    }

    Bytes take() { return std::move(buf_); }
    const Bytes& bytes() const { return buf_; }
    size_t size() const { return buf_.size(); }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(ByteView data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    bool empty() const { return remaining() == 0; }

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }
    uint32_t u24() {
        need(3);
        uint32_t v = static_cast<uint32_t>(data_[pos_]) << 16 | static_cast<uint32_t>(data_[pos_ + 1]) << 8 |
                     data_[pos_ + 2];
        pos_ += 3;
        return v;
    }
    uint32_t u32() {
        uint32_t hi = u16();
        return hi << 16 | u16();
    }
    ByteView raw(size_t n) {
        need(n);
        ByteView v = data_.subspan(pos_, n);
        pos_ += n;
        return v;
    }
    Bytes vec(int len_bytes) {
        size_t n = 0;
        switch (len_bytes) {
        case 1: n = u8(); break;
        case 2: n = u16(); break;
        case 3: n = u24(); break;
        default: n = u32(); break;
        }
        ByteView v = raw(n);
        return Bytes(v.begin(), v.end());
    }
    void expect_end(const char* what) const {
        if (!empty()) raise(Err::VectorBoundViolation, std::string("trailing bytes after ") + what);
    }

private:
    void need(size_t n) const {
        if (remaining() < n) raise(Err::Truncated, "need " + std::to_string(n) + " bytes, have " + std::to_string(remaining()));
    }

    ByteView data_;
    size_t pos_ = 0;
};

} // namespace vctls
