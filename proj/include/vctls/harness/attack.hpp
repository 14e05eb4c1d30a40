// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// MiTM demonstration: an attacker intercepting DID resolution forges a
// DID Document binding the victim's DID to a key it owns, then
// impersonates the victim with the victim's (public) VC and its own
// CertificateVerify. A plain resolver channel lets this through; the
// authenticated channel stops it at the registry signature check.

#pragma once

#include "vctls/harness/pool.hpp"

namespace vctls::harness {

struct AttackReport {
    registry::ChannelMode mode = registry::ChannelMode::plain;
    bool impersonation_succeeded = false;
    bool defense_held = false;
    std::optional<handshake::AlertCode> alert;
    std::vector<std::string> log;
    bool expectation_met = false; // plain: attack succeeds; authenticated: attack blocked
};

AttackReport run_attack(const CredentialPool& pool, registry::ChannelMode mode);

} // namespace vctls::harness
