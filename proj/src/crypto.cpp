// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/kdf.h>
#include <openssl/rand.h>

#include <cstring>

namespace vctls::crypto {

namespace {

[[noreturn]] void ossl_fail(const char* what) {
    throw std::runtime_error(std::string("openssl: ") + what);
}

struct PkeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;

struct PkeyCtxDeleter {
    void operator()(EVP_PKEY_CTX* p) const { EVP_PKEY_CTX_free(p); }
};
using PkeyCtxPtr = std::unique_ptr<EVP_PKEY_CTX, PkeyCtxDeleter>;

struct MdCtxDeleter {
    void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

struct CipherCtxDeleter {
    void operator()(EVP_CIPHER_CTX* p) const { EVP_CIPHER_CTX_free(p); }
};
using CipherCtxPtr = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

Key32 raw_public_key(EVP_PKEY* pkey) {
    Key32 pk{};
    size_t len = pk.size();
    if (EVP_PKEY_get_raw_public_key(pkey, pk.data(), &len) != 1 || len != pk.size())
        ossl_fail("get_raw_public_key");
    return pk;
}

} // namespace

Bytes random_bytes(size_t n) {
    Bytes out(n);
    if (n > 0 && RAND_bytes(out.data(), static_cast<int>(n)) != 1) ossl_fail("RAND_bytes");
    return out;
}

Key32 random_key32() {
    Key32 out{};
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) ossl_fail("RAND_bytes");
    return out;
}

std::array<uint8_t, 32> sha256(ByteView data) {
    std::array<uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
        ossl_fail("sha256");
    return out;
}

Hash sha384(ByteView data) {
    Hash out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha384(), nullptr) != 1 || len != kHashLen)
        ossl_fail("sha384");
    return out;
}

Sha384::Sha384() {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha384(), nullptr) != 1) ossl_fail("sha384 init");
    ctx_ = ctx;
}

Sha384::Sha384(const Sha384& other) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_MD_CTX_copy_ex(ctx, static_cast<EVP_MD_CTX*>(other.ctx_)) != 1) ossl_fail("sha384 copy");
    ctx_ = ctx;
}

Sha384& Sha384::operator=(const Sha384& other) {
    if (this != &other) {
        if (EVP_MD_CTX_copy_ex(static_cast<EVP_MD_CTX*>(ctx_), static_cast<EVP_MD_CTX*>(other.ctx_)) != 1)
            ossl_fail("sha384 copy");
    }
    return *this;
}

Sha384::~Sha384() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha384::update(ByteView data) {
    if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size()) != 1) ossl_fail("sha384 update");
}

Hash Sha384::digest() const {
    MdCtxPtr copy(EVP_MD_CTX_new());
    if (!copy || EVP_MD_CTX_copy_ex(copy.get(), static_cast<EVP_MD_CTX*>(ctx_)) != 1) ossl_fail("sha384 copy");
    Hash out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(copy.get(), out.data(), &len) != 1 || len != kHashLen) ossl_fail("sha384 final");
    return out;
}

Hash hmac_sha384(ByteView key, ByteView data) {
    Hash out{};
    unsigned int len = 0;
    if (!HMAC(EVP_sha384(), key.data(), static_cast<int>(key.size()), data.data(), data.size(), out.data(), &len) ||
        len != kHashLen)
        ossl_fail("hmac");
    return out;
}

namespace {

Bytes hkdf_sha384(int mode, ByteView salt, ByteView key, ByteView info, size_t out_len) {
    PkeyCtxPtr ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_HKDF, nullptr));
    if (!ctx || EVP_PKEY_derive_init(ctx.get()) != 1) ossl_fail("hkdf init");
    if (EVP_PKEY_CTX_hkdf_mode(ctx.get(), mode) != 1) ossl_fail("hkdf mode");
    if (EVP_PKEY_CTX_set_hkdf_md(ctx.get(), EVP_sha384()) != 1) ossl_fail("hkdf md");
    if (EVP_PKEY_CTX_set1_hkdf_key(ctx.get(), key.data(), static_cast<int>(key.size())) != 1) ossl_fail("hkdf key");
    if (!salt.empty() && EVP_PKEY_CTX_set1_hkdf_salt(ctx.get(), salt.data(), static_cast<int>(salt.size())) != 1)
        ossl_fail("hkdf salt");
    if (!info.empty() && EVP_PKEY_CTX_add1_hkdf_info(ctx.get(), info.data(), static_cast<int>(info.size())) != 1)
        ossl_fail("hkdf info");
    Bytes out(out_len);
    size_t len = out_len;
    if (EVP_PKEY_derive(ctx.get(), out.data(), &len) != 1 || len != out_len) ossl_fail("hkdf derive");
    return out;
}

} // namespace

Hash hkdf_extract_sha384(ByteView salt, ByteView ikm) {
    Bytes prk = hkdf_sha384(EVP_PKEY_HKDEF_MODE_EXTRACT_ONLY, salt, ikm, {}, kHashLen);
    return to_array<kHashLen>(prk);
}

Bytes hkdf_expand_sha384(ByteView prk, ByteView info, size_t out_len) {
    return hkdf_sha384(EVP_PKEY_HKDEF_MODE_EXPAND_ONLY, {}, prk, info, out_len);
}

Ed25519KeyPair ed25519_generate() { return ed25519_from_seed(random_key32()); }

Ed25519KeyPair ed25519_from_seed(const Key32& seed) {
    PkeyPtr pkey(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, seed.data(), seed.size()));
    if (!pkey) ossl_fail("ed25519 private key");
    return Ed25519KeyPair{seed, raw_public_key(pkey.get())};
}

Signature ed25519_sign(const Key32& seed, ByteView msg) {
    PkeyPtr pkey(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, seed.data(), seed.size()));
    if (!pkey) ossl_fail("ed25519 private key");
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, pkey.get()) != 1) ossl_fail("sign init");
    Signature sig{};
    size_t len = sig.size();
    if (EVP_DigestSign(ctx.get(), sig.data(), &len, msg.data(), msg.size()) != 1 || len != sig.size())
        ossl_fail("sign");
    return sig;
}

bool ed25519_verify(const Key32& pk, ByteView msg, const Signature& sig) {
    PkeyPtr pkey(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, pk.data(), pk.size()));
    if (!pkey) return false;
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, pkey.get()) != 1) return false;
    return EVP_DigestVerify(ctx.get(), sig.data(), sig.size(), msg.data(), msg.size()) == 1;
}

X25519KeyPair x25519_generate() {
    PkeyCtxPtr gen(EVP_PKEY_CTX_new_id(EVP_PKEY_X25519, nullptr));
    EVP_PKEY* raw = nullptr;
    if (!gen || EVP_PKEY_keygen_init(gen.get()) != 1 || EVP_PKEY_keygen(gen.get(), &raw) != 1)
        ossl_fail("x25519 keygen");
    PkeyPtr pkey(raw);
    X25519KeyPair kp;
    size_t len = kp.sk.size();
    if (EVP_PKEY_get_raw_private_key(pkey.get(), kp.sk.data(), &len) != 1 || len != kp.sk.size())
        ossl_fail("x25519 raw private");
    kp.pk = raw_public_key(pkey.get());
    return kp;
}

Key32 x25519_shared(const Key32& sk, const Key32& peer_pk) {
    PkeyPtr mine(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr, sk.data(), sk.size()));
    PkeyPtr peer(EVP_PKEY_new_raw_public_key(EVP_PKEY_X25519, nullptr, peer_pk.data(), peer_pk.size()));
    if (!mine || !peer) ossl_fail("x25519 keys");
    PkeyCtxPtr ctx(EVP_PKEY_CTX_new(mine.get(), nullptr));
    if (!ctx || EVP_PKEY_derive_init(ctx.get()) != 1 || EVP_PKEY_derive_set_peer(ctx.get(), peer.get()) != 1)
        ossl_fail("x25519 derive init");
    Key32 shared{};
    size_t len = shared.size();
    if (EVP_PKEY_derive(ctx.get(), shared.data(), &len) != 1 || len != shared.size()) ossl_fail("x25519 derive");
    return shared;
}

Bytes aead_seal(const Key32& key, const Iv& nonce, ByteView aad, ByteView plaintext) {
    CipherCtxPtr ctx(EVP_CIPHER_CTX_new());
    if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
        ossl_fail("gcm init");
    int len = 0;
    if (!aad.empty() && EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1)
        ossl_fail("gcm aad");
    Bytes out(plaintext.size() + kTagLen);
    if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(), static_cast<int>(plaintext.size())) != 1)
        ossl_fail("gcm encrypt");
    int total = len;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + total, &len) != 1) ossl_fail("gcm final");
    total += len;
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kTagLen, out.data() + total) != 1) ossl_fail("gcm tag");
    out.resize(total + kTagLen);
    return out;
}

Bytes aead_open(const Key32& key, const Iv& nonce, ByteView aad, ByteView ciphertext) {
    if (ciphertext.size() < kTagLen) raise(Err::AuthTagMismatch, "ciphertext shorter than tag");
    size_t ct_len = ciphertext.size() - kTagLen;
    CipherCtxPtr ctx(EVP_CIPHER_CTX_new());
    if (!ctx || EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
        ossl_fail("gcm init");
    int len = 0;
    if (!aad.empty() && EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1)
        ossl_fail("gcm aad");
    Bytes out(ct_len);
    if (ct_len > 0 &&
        EVP_DecryptUpdate(ctx.get(), out.data(), &len, ciphertext.data(), static_cast<int>(ct_len)) != 1)
        ossl_fail("gcm decrypt");
    int total = ct_len > 0 ? len : 0;
    uint8_t tag[kTagLen];
    std::memcpy(tag, ciphertext.data() + ct_len, kTagLen);
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kTagLen, tag) != 1) ossl_fail("gcm set tag");
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + total, &len) != 1)
        raise(Err::AuthTagMismatch, "AEAD tag verification failed");
    total += len;
    out.resize(total);
    return out;
}

} // namespace vctls::crypto
