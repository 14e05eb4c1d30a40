// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Scenario files are line-oriented key=value records, one scenario per
// blank-line-separated block:
//
//   name=uni-vc
//   flow=unilateral
//   client_cred=vc
//   server_cred=vc
//   resolver=plain
//   pinning=off
//   repetitions=100
//   transport=memory
//   server_rfc7250=on
//
// '#' starts a comment.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vctls/handshake/session.hpp"
#include "vctls/registry/resolver.hpp"

namespace vctls::harness {

struct ScenarioSpec {
    std::string name = "scenario";
    bool mutual = false;
    handshake::CredentialKind client_cred = handshake::CredentialKind::x509;
    handshake::CredentialKind server_cred = handshake::CredentialKind::x509;
    registry::ChannelMode resolver_mode = registry::ChannelMode::plain;
    bool pinning = false;
    int repetitions = 100;
    enum class Transport { memory, tcp } transport = Transport::memory;
    bool server_rfc7250 = true; // off reproduces the fallback flow
};

void validate(const ScenarioSpec& spec); // SchemaViolation

std::vector<ScenarioSpec> parse_scenarios(std::istream& in);       // SchemaViolation with line info
std::vector<ScenarioSpec> load_scenarios(const std::string& path); // IoError

// The scenario set behind the default bench run: every table cell the
// artifact reproduces (sizes, unilateral/mutual latencies, hybrid pair,
// fallback).
std::vector<ScenarioSpec> default_scenarios(int repetitions);

} // namespace vctls::harness
