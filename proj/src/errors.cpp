// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/errors.hpp"

namespace vctls {

const char* err_name(Err e) {
    switch (e) {
    case Err::FieldTooLong: return "FieldTooLong";
    case Err::MissingMandatoryExtension: return "MissingMandatoryExtension";
    case Err::Truncated: return "Truncated";
    case Err::UnknownMessageType: return "UnknownMessageType";
    case Err::VectorBoundViolation: return "VectorBoundViolation";
    case Err::OddLength: return "OddLength";
    case Err::EmptyList: return "EmptyList";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::PayloadTooLarge: return "PayloadTooLarge";
    case Err::AuthTagMismatch: return "AuthTagMismatch";
    case Err::UnknownMethod: return "UnknownMethod";
    case Err::InvalidValidityWindow: return "InvalidValidityWindow";
    case Err::SchemaViolation: return "SchemaViolation";
    case Err::Expired: return "Expired";
    case Err::NotYetValid: return "NotYetValid";
    case Err::BadIssuerSignature: return "BadIssuerSignature";
    case Err::BadArmor: return "BadArmor";
    case Err::LabelMismatch: return "LabelMismatch";
    case Err::BrokenChain: return "BrokenChain";
    case Err::UntrustedRoot: return "UntrustedRoot";
    case Err::AlreadyExists: return "AlreadyExists";
    case Err::NotFound: return "NotFound";
    case Err::Deactivated: return "Deactivated";
    case Err::BadRegistrySignature: return "BadRegistrySignature";
    case Err::BadControlProof: return "BadControlProof";
    case Err::UnsupportedCertificate: return "UnsupportedCertificate";
    case Err::HandshakeFailure: return "HandshakeFailure";
    case Err::CredentialTypeMismatch: return "CredentialTypeMismatch";
    case Err::BadCertificate: return "BadCertificate";
    case Err::CertificateRequired: return "CertificateRequired";
    case Err::DecodeError: return "DecodeError";
    case Err::DecryptError: return "DecryptError";
    case Err::BadRecordMac: return "BadRecordMac";
    case Err::IoError: return "IoError";
    case Err::UnexpectedOutcome: return "UnexpectedOutcome";
    case Err::AssertionFailure: return "AssertionFailure";
    }
    return "UnknownError";
}

} // namespace vctls
