// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vctls {

enum class Err {
    // wire
    FieldTooLong,
    MissingMandatoryExtension,
    Truncated,
    UnknownMessageType,
    VectorBoundViolation,
    OddLength,
    EmptyList,
    LengthMismatch,
    PayloadTooLarge,
    AuthTagMismatch,
    // identity
    UnknownMethod,
    InvalidValidityWindow,
    SchemaViolation,
    Expired,
    NotYetValid,
    BadIssuerSignature,
    BadArmor,
    LabelMismatch,
    BrokenChain,
    UntrustedRoot,
    // registry
    AlreadyExists,
    NotFound,
    Deactivated,
    BadRegistrySignature,
    BadControlProof,
    // handshake
    UnsupportedCertificate,
    HandshakeFailure,
    CredentialTypeMismatch,
    BadCertificate,
    CertificateRequired,
    DecodeError,
    DecryptError,
    BadRecordMac,
    // harness
    IoError,
    UnexpectedOutcome,
    AssertionFailure,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& what) { throw Error(code, what); }

} // namespace vctls
