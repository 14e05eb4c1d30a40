// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Process exit codes are a total function of the outcome class.

#pragma once

#include "vctls/handshake/session.hpp"

namespace vctls::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitUnexpectedOutcome = 4;
inline constexpr int kExitAssertionFailure = 5;
inline constexpr int kExitAlreadyExists = 6;
inline constexpr int kExitUnknownMethod = 7;
inline constexpr int kExitInvalidValidity = 8;

inline int exit_code_for_alert(handshake::AlertCode code) {
    switch (code) {
    case handshake::AlertCode::unsupported_certificate: return 10;
    case handshake::AlertCode::bad_certificate: return 11;
    case handshake::AlertCode::certificate_required: return 12;
    case handshake::AlertCode::handshake_failure: return 13;
    case handshake::AlertCode::decode_error: return 14;
    case handshake::AlertCode::decrypt_error: return 15;
    case handshake::AlertCode::bad_record_mac: return 16;
    }
    return 13;
}

inline int exit_code_for_error(const Error& e) {
    switch (e.code()) {
    case Err::IoError: return kExitIo;
    case Err::UnexpectedOutcome: return kExitUnexpectedOutcome;
    case Err::AssertionFailure: return kExitAssertionFailure;
    case Err::AlreadyExists: return kExitAlreadyExists;
    case Err::UnknownMethod: return kExitUnknownMethod;
    case Err::InvalidValidityWindow: return kExitInvalidValidity;
    case Err::UnsupportedCertificate:
    case Err::HandshakeFailure:
    case Err::CredentialTypeMismatch:
    case Err::BadCertificate:
    case Err::CertificateRequired:
    case Err::DecodeError:
    case Err::DecryptError:
    case Err::BadRecordMac: return exit_code_for_alert(handshake::alert_for(e.code()));
    default: return kExitUsage;
    }
}

} // namespace vctls::harness
