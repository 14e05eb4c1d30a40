// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/identity/chain.hpp"

#include <json.hpp>

namespace vctls::identity {

namespace {

nlohmann::json cert_to_json(const ChainCertificate& cert, bool include_signature) {
    nlohmann::json j = {
        {"issuer", cert.issuer},
        {"notAfter", rfc3339_utc(cert.not_after)},
        {"notBefore", rfc3339_utc(cert.not_before)},
        {"subject", cert.subject},
        {"subjectPublicKey", to_hex(cert.subject_pk)},
    };
    if (include_signature) j["signature"] = to_hex(cert.signature);
    return j;
}

ChainCertificate sign_cert(std::string subject, const crypto::Key32& subject_pk, std::string issuer,
                           const KeyPair& issuer_keys, UnixSeconds nb, UnixSeconds na) {
    ChainCertificate cert;
    cert.subject = std::move(subject);
    cert.subject_pk = subject_pk;
    cert.issuer = std::move(issuer);
    cert.not_before = nb;
    cert.not_after = na;
    cert.signature = crypto::ed25519_sign(issuer_keys.seed, signing_bytes(cert));
    return cert;
}

bool is_self_signed(const ChainCertificate& cert) {
    return cert.subject == cert.issuer &&
           crypto::ed25519_verify(cert.subject_pk, signing_bytes(cert), cert.signature);
}

} // namespace

Bytes signing_bytes(const ChainCertificate& cert) {
    std::string s = cert_to_json(cert, /*include_signature=*/false).dump();
    return Bytes(s.begin(), s.end());
}

Bytes cert_bytes(const ChainCertificate& cert) {
    std::string s = cert_to_json(cert, /*include_signature=*/true).dump();
    ByteWriter w;
    w.u32(static_cast<uint32_t>(s.size()));
    w.raw(Bytes(s.begin(), s.end()));
    return w.take();
}

ChainCertificate cert_from_bytes(ByteView bytes) {
    if (bytes.size() < 4) raise(Err::Truncated, "certificate shorter than length prefix");
    ByteReader r(bytes);
    uint32_t len = r.u32();
    if (r.remaining() != len) raise(Err::Truncated, "certificate length prefix mismatch");
    ByteView body = r.raw(len);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body.begin(), body.end());
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("certificate parse: ") + e.what());
    }
    try {
        ChainCertificate cert;
        cert.subject = j.at("subject").get<std::string>();
        cert.subject_pk = to_array<32>(from_hex(j.at("subjectPublicKey").get<std::string>()));
        cert.issuer = j.at("issuer").get<std::string>();
        cert.not_before = rfc3339_parse(j.at("notBefore").get<std::string>());
        cert.not_after = rfc3339_parse(j.at("notAfter").get<std::string>());
        cert.signature = to_array<64>(from_hex(j.at("signature").get<std::string>()));
        return cert;
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("certificate fields: ") + e.what());
    }
}

ChainBundle make_chain(const std::array<std::string, 3>& names, UnixSeconds not_before, UnixSeconds not_after) {
    ChainBundle bundle;
    bundle.keys = {crypto::ed25519_generate(), crypto::ed25519_generate(), crypto::ed25519_generate()};
    const auto& [leaf_name, mid_name, root_name] = names;
    ChainCertificate root = sign_cert(root_name, bundle.keys[2].pk, root_name, bundle.keys[2], not_before, not_after);
    ChainCertificate mid = sign_cert(mid_name, bundle.keys[1].pk, root_name, bundle.keys[2], not_before, not_after);
    ChainCertificate leaf = sign_cert(leaf_name, bundle.keys[0].pk, mid_name, bundle.keys[1], not_before, not_after);
    bundle.chain = {std::move(leaf), std::move(mid), std::move(root)};
    return bundle;
}

crypto::Key32 verify_chain(std::span<const ChainCertificate> chain, std::span<const ChainCertificate> anchors,
                           UnixSeconds now) {
    if (chain.empty()) raise(Err::BrokenChain, "empty chain");
    for (const ChainCertificate& cert : chain) {
        if (now < cert.not_before || now > cert.not_after)
            raise(Err::Expired, "certificate for " + cert.subject + " outside validity window");
    }
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        const ChainCertificate& child = chain[i];
        const ChainCertificate& parent = chain[i + 1];
        if (child.issuer != parent.subject ||
            !crypto::ed25519_verify(parent.subject_pk, signing_bytes(child), child.signature))
            raise(Err::BrokenChain, "signature on " + child.subject + " does not verify");
    }
    const ChainCertificate& last = chain.back();
    if (is_self_signed(last)) {
        for (const ChainCertificate& anchor : anchors)
            if (anchor == last) return chain.front().subject_pk;
        raise(Err::UntrustedRoot, "root " + last.subject + " is not a configured anchor");
    }
    for (const ChainCertificate& anchor : anchors) {
        if (anchor.subject == last.issuer &&
            crypto::ed25519_verify(anchor.subject_pk, signing_bytes(last), last.signature))
            return chain.front().subject_pk;
    }
    raise(Err::UntrustedRoot, "no anchor signs " + last.subject);
}

} // namespace vctls::identity
