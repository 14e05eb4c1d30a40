// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal certificate-chain stand-in with the cryptographic shape of a
// three-link Ed25519 X.509 chain: one subject key and one issuer
// signature per link, root self-signed.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "vctls/identity/identity.hpp"
#include "vctls/time.hpp"

namespace vctls::identity {

struct ChainCertificate {
    std::string subject;
    crypto::Key32 subject_pk{};
    std::string issuer;
    UnixSeconds not_before = 0;
    UnixSeconds not_after = 0;
    crypto::Signature signature{};
    bool operator==(const ChainCertificate&) const = default;
};

Bytes signing_bytes(const ChainCertificate& cert); // deterministic, signature excluded
Bytes cert_bytes(const ChainCertificate& cert);    // 4-byte length prefix + serialization
ChainCertificate cert_from_bytes(ByteView bytes);  // Truncated, SchemaViolation

struct ChainBundle {
    std::vector<ChainCertificate> chain; // [leaf, intermediate, root]
    std::array<KeyPair, 3> keys;         // matching order
    const KeyPair& leaf_keys() const { return keys[0]; }
    const ChainCertificate& root() const { return chain[2]; }
};

ChainBundle make_chain(const std::array<std::string, 3>& names /* leaf, intermediate, root */,
                       UnixSeconds not_before, UnixSeconds not_after);

// Verifies pairwise signatures and validity windows, leaf first. The chain
// may include the self-signed root (which must equal a configured anchor)
// or stop at the link whose issuer names an anchor. Returns the leaf pk.
crypto::Key32 verify_chain(std::span<const ChainCertificate> chain,
                           std::span<const ChainCertificate> anchors,
                           UnixSeconds now); // BrokenChain, UntrustedRoot, Expired

} // namespace vctls::identity
