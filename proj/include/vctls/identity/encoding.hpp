// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// PEM/DER encoding for identity documents. "DER" is a 4-byte big-endian
// length prefix over the deterministic serialization (proof included for
// credentials); PEM wraps the DER form in base64 armor with the labels
// "VC" and "DID DOCUMENT".

#pragma once

#include "vctls/identity/vc.hpp"

namespace vctls::identity {

Bytes encode_der(const VerifiableCredential& vc);
VerifiableCredential vc_from_der(ByteView der); // Truncated, SchemaViolation

Bytes encode_der(const DidDocument& doc);
DidDocument document_from_der(ByteView der);

std::string encode_pem(const VerifiableCredential& vc);
std::string encode_pem(const DidDocument& doc);
VerifiableCredential vc_from_pem(const std::string& pem);   // BadArmor, LabelMismatch
DidDocument document_from_pem(const std::string& pem);

std::string base64_encode(ByteView data);
Bytes base64_decode(const std::string& text); // BadArmor

} // namespace vctls::identity
