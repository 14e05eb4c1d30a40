// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Thin wrappers over OpenSSL libcrypto. Everything the engine needs is
// Ed25519, X25519, SHA-384, HMAC/HKDF-SHA-384 and AES-256-GCM.

#pragma once

#include <array>
#include <memory>
#include <optional>

#include "vctls/bytes.hpp"

namespace vctls::crypto {

inline constexpr size_t kHashLen = 48; // SHA-384
inline constexpr size_t kKeyLen = 32;  // AES-256
inline constexpr size_t kIvLen = 12;
inline constexpr size_t kTagLen = 16;
inline constexpr size_t kPkLen = 32; // Ed25519 / X25519
inline constexpr size_t kSigLen = 64;

using Hash = std::array<uint8_t, kHashLen>;
using Key32 = std::array<uint8_t, 32>;
using Iv = std::array<uint8_t, kIvLen>;
using Signature = std::array<uint8_t, kSigLen>;

Bytes random_bytes(size_t n);
Key32 random_key32();

std::array<uint8_t, 32> sha256(ByteView data);
Hash sha384(ByteView data);

// Incremental SHA-384 with cheap snapshots, used for the handshake transcript.
class Sha384 {
public:
    Sha384();
    Sha384(const Sha384& other);
    Sha384& operator=(const Sha384& other);
    ~Sha384();

    void update(ByteView data);
    Hash digest() const; // digest of everything fed so far; stream stays usable

private:
    void* ctx_; // EVP_MD_CTX
};

Hash hmac_sha384(ByteView key, ByteView data);
Hash hkdf_extract_sha384(ByteView salt, ByteView ikm);
Bytes hkdf_expand_sha384(ByteView prk, ByteView info, size_t out_len);

struct Ed25519KeyPair {
    Key32 seed{};
    Key32 pk{};
    bool operator==(const Ed25519KeyPair&) const = default;
};

Ed25519KeyPair ed25519_generate();
Ed25519KeyPair ed25519_from_seed(const Key32& seed);
Signature ed25519_sign(const Key32& seed, ByteView msg);
bool ed25519_verify(const Key32& pk, ByteView msg, const Signature& sig);

struct X25519KeyPair {
    Key32 sk{};
    Key32 pk{};
};

X25519KeyPair x25519_generate();
Key32 x25519_shared(const Key32& sk, const Key32& peer_pk);

// AES-256-GCM; ciphertext carries the 16-byte tag at the end.
Bytes aead_seal(const Key32& key, const Iv& nonce, ByteView aad, ByteView plaintext);
Bytes aead_open(const Key32& key, const Iv& nonce, ByteView aad, ByteView ciphertext); // AuthTagMismatch

} // namespace vctls::crypto
