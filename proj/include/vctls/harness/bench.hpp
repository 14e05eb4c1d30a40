// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-checking benchmark runner. Every run is checked against the
// resolve-count law and the public-key-object accounting; a violation
// fails the whole report.

#pragma once

#include <iosfwd>

#include "vctls/harness/pool.hpp"
#include "vctls/harness/scenario.hpp"

namespace vctls::harness {

// Per-scenario constants fixed by the protocol, independent of credential
// selection.
struct LawExpectations {
    uint64_t client_resolves = 0;
    uint64_t server_resolves = 0;
    handshake::PkObjectCount client_pk; // client -> server identity objects
    handshake::PkObjectCount server_pk; // server -> client identity objects
    bool fallback = false;
};

LawExpectations expectations_for(const ScenarioSpec& spec, uint8_t vc_code);

struct ScenarioStats {
    ScenarioSpec spec;
    LawExpectations expected;
    int runs = 0;
    int failures = 0;
    double mean_ms = 0;
    double stddev_ms = 0;
    double resolve_mean_ms = 0; // client+server resolution time per run
    double mean_bytes_client_to_server = 0;
    double mean_bytes_server_to_client = 0;
    handshake::PkObjectCount pk_client_to_server;
    handshake::PkObjectCount pk_server_to_client;
    uint64_t client_resolves_per_run = 0;
    uint64_t server_resolves_per_run = 0;
    uint64_t total_resolves = 0;
    std::vector<std::string> violations;

    bool ok() const { return failures == 0 && violations.empty(); }
};

struct BenchReport {
    std::vector<ScenarioStats> scenarios;
    bool all_ok = true;
};

struct BenchOptions {
    int parallel = 1; // bounded worker count for repetitions
};

BenchReport run_bench(const CredentialPool& pool, const std::vector<ScenarioSpec>& specs,
                      const BenchOptions& options = {});

void print_report(const BenchReport& report, std::ostream& out);
void write_records(const BenchReport& report, const std::string& path); // JSON lines; IoError

} // namespace vctls::harness
