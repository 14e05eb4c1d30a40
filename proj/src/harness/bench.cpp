// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/harness/bench.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "vctls/harness/tcp.hpp"

namespace vctls::harness {

using handshake::CredentialKind;

namespace {

handshake::PkObjectCount sender_pk_objects(CredentialKind kind) {
    handshake::PkObjectCount pk;
    switch (kind) {
    case CredentialKind::vc: // issuer proof + CertificateVerify
        pk.signature_bytes = 2 * crypto::kSigLen;
        break;
    case CredentialKind::x509: // leaf + intermediate keys, their signatures + CertificateVerify
        pk.public_key_bytes = 2 * crypto::kPkLen;
        pk.signature_bytes = 3 * crypto::kSigLen;
        break;
    case CredentialKind::raw_public_key:
        pk.public_key_bytes = crypto::kPkLen;
        pk.signature_bytes = crypto::kSigLen;
        break;
    }
    return pk;
}

uint64_t verifier_resolves(CredentialKind peer_kind, bool pinned) {
    if (peer_kind != CredentialKind::vc) return 0;
    return pinned ? 1 : 2;
}

double ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

struct RunAccumulator {
    std::mutex mu;
    int failures = 0;
    std::vector<std::string> violations;
    std::vector<double> wall_ms;
    std::vector<double> resolve_ms;
    double bytes_cs = 0, bytes_sc = 0;
    handshake::PkObjectCount pk_cs, pk_sc;
    uint64_t client_resolves = 0, server_resolves = 0, total_resolves = 0;

    void note_violation(const std::string& v) {
        if (violations.size() < 8) violations.push_back(v);
    }
};

void run_one(const CredentialPool& pool, const ScenarioSpec& spec, const LawExpectations& expected,
             std::shared_ptr<registry::Resolver> resolver, std::mt19937_64& rng, RunAccumulator& acc) {
    EndpointSpec client_spec;
    client_spec.is_client = true;
    client_spec.mutual = spec.mutual;
    if (spec.mutual) client_spec.credential = spec.client_cred;
    client_spec.peer_kind = spec.server_cred;
    client_spec.pin_issuer = spec.pinning;
    client_spec.resolver_mode = spec.resolver_mode;
    client_spec.offer_vc_anyway = !spec.server_rfc7250;

    EndpointSpec server_spec;
    server_spec.is_client = false;
    server_spec.mutual = spec.mutual;
    server_spec.credential = spec.server_cred;
    server_spec.peer_kind = spec.client_cred;
    server_spec.pin_issuer = spec.pinning;
    server_spec.resolver_mode = spec.resolver_mode;
    server_spec.rfc7250_enabled = spec.server_rfc7250;

    handshake::EndpointConfig ccfg, scfg;
    {
        std::lock_guard lock(acc.mu); // rng and pool picks under one lock
        ccfg = make_endpoint_config(pool, client_spec, resolver, rng);
        scfg = make_endpoint_config(pool, server_spec, resolver, rng);
    }

    handshake::RunResult result = spec.transport == ScenarioSpec::Transport::tcp
                                      ? run_handshake_tcp(ccfg, scfg)
                                      : handshake::run_handshake(ccfg, scfg);

    std::lock_guard lock(acc.mu);
    if (!result.ok) {
        acc.failures += 1;
        acc.note_violation(spec.name + ": run failed: " +
                           (result.client.detail.empty() ? result.server.detail : result.client.detail));
        return;
    }
    if (result.client.secrets != result.server.secrets)
        acc.note_violation(spec.name + ": application traffic secrets differ");
    const auto& cm = result.client.metrics;
    const auto& sm = result.server.metrics;
    if (cm.did_resolves != expected.client_resolves)
        acc.note_violation(spec.name + ": client resolves " + std::to_string(cm.did_resolves) + " != " +
                           std::to_string(expected.client_resolves));
    if (sm.did_resolves != expected.server_resolves)
        acc.note_violation(spec.name + ": server resolves " + std::to_string(sm.did_resolves) + " != " +
                           std::to_string(expected.server_resolves));
    if (cm.pk_objects_sent != expected.client_pk)
        acc.note_violation(spec.name + ": client pk objects " + std::to_string(cm.pk_objects_sent.total()) +
                           " != " + std::to_string(expected.client_pk.total()));
    if (sm.pk_objects_sent != expected.server_pk)
        acc.note_violation(spec.name + ": server pk objects " + std::to_string(sm.pk_objects_sent.total()) +
                           " != " + std::to_string(expected.server_pk.total()));
    if (result.client.outcome.fallback != expected.fallback)
        acc.note_violation(spec.name + ": fallback flag mismatch");

    acc.wall_ms.push_back(ms(cm.wall_clock));
    acc.resolve_ms.push_back(ms(cm.resolve_clock) + ms(sm.resolve_clock));
    acc.bytes_cs += static_cast<double>(cm.bytes_sent);
    acc.bytes_sc += static_cast<double>(sm.bytes_sent);
    acc.pk_cs = cm.pk_objects_sent;
    acc.pk_sc = sm.pk_objects_sent;
    acc.client_resolves = cm.did_resolves;
    acc.server_resolves = sm.did_resolves;
    acc.total_resolves += cm.did_resolves + sm.did_resolves;
}

} // namespace

LawExpectations expectations_for(const ScenarioSpec& spec, uint8_t /*vc_code*/) {
    LawExpectations exp;
    CredentialKind server_kind = spec.server_rfc7250 ? spec.server_cred : CredentialKind::x509;
    bool baseline = spec.client_cred == CredentialKind::x509 && spec.server_cred == CredentialKind::x509;
    exp.fallback = !spec.server_rfc7250 || baseline;
    exp.client_resolves = verifier_resolves(server_kind, spec.pinning);
    exp.server_resolves = spec.mutual ? verifier_resolves(spec.client_cred, spec.pinning) : 0;
    exp.server_pk = sender_pk_objects(server_kind);
    if (spec.mutual) exp.client_pk = sender_pk_objects(spec.client_cred);
    return exp;
}

BenchReport run_bench(const CredentialPool& pool, const std::vector<ScenarioSpec>& specs,
                      const BenchOptions& options) {
    BenchReport report;
    auto resolver = std::make_shared<registry::LedgerResolver>(pool.ledger, pool.registry_keys);
    std::random_device rd;

    for (const ScenarioSpec& spec : specs) {
        validate(spec);
        ScenarioStats stats;
        stats.spec = spec;
        stats.expected = expectations_for(spec, pool.protocol.points.vc_certificate_type);
        RunAccumulator acc;
        std::mt19937_64 rng(rd());

        int workers = std::max(1, std::min(options.parallel, spec.repetitions));
        if (workers == 1) {
            for (int i = 0; i < spec.repetitions; ++i) run_one(pool, spec, stats.expected, resolver, rng, acc);
        } else {
            std::vector<std::thread> threads;
            std::atomic<int> next{0};
            for (int w = 0; w < workers; ++w)
                threads.emplace_back([&] {
                    while (next.fetch_add(1) < spec.repetitions)
                        run_one(pool, spec, stats.expected, resolver, rng, acc);
                });
            for (auto& t : threads) t.join();
        }

        stats.runs = spec.repetitions;
        stats.failures = acc.failures;
        stats.violations = acc.violations;
        if (!acc.wall_ms.empty()) {
            double sum = 0;
            for (double v : acc.wall_ms) sum += v;
            stats.mean_ms = sum / static_cast<double>(acc.wall_ms.size());
            double var = 0;
            for (double v : acc.wall_ms) var += (v - stats.mean_ms) * (v - stats.mean_ms);
            stats.stddev_ms = std::sqrt(var / static_cast<double>(acc.wall_ms.size()));
            double rsum = 0;
            for (double v : acc.resolve_ms) rsum += v;
            stats.resolve_mean_ms = rsum / static_cast<double>(acc.resolve_ms.size());
            stats.mean_bytes_client_to_server = acc.bytes_cs / static_cast<double>(acc.wall_ms.size());
            stats.mean_bytes_server_to_client = acc.bytes_sc / static_cast<double>(acc.wall_ms.size());
        }
        stats.pk_client_to_server = acc.pk_cs;
        stats.pk_server_to_client = acc.pk_sc;
        stats.client_resolves_per_run = acc.client_resolves;
        stats.server_resolves_per_run = acc.server_resolves;
        stats.total_resolves = acc.total_resolves;

        // Aggregate law: total resolves must equal repetitions times the
        // per-run law value.
        uint64_t law_total = static_cast<uint64_t>(stats.runs - stats.failures) *
                             (stats.expected.client_resolves + stats.expected.server_resolves);
        if (stats.total_resolves != law_total)
            stats.violations.push_back(spec.name + ": aggregate resolves " + std::to_string(stats.total_resolves) +
                                       " != " + std::to_string(law_total));

        report.all_ok = report.all_ok && stats.ok();
        report.scenarios.push_back(std::move(stats));
    }
    return report;
}

namespace {

std::string pk_breakdown(const handshake::PkObjectCount& pk) {
    std::string keys = pk.public_key_bytes == 0
                           ? "/"
                           : std::to_string(pk.public_key_bytes / crypto::kPkLen) + "*" + std::to_string(crypto::kPkLen);
    std::string sigs = pk.signature_bytes == 0
                           ? "/"
                           : std::to_string(pk.signature_bytes / crypto::kSigLen) + "*" + std::to_string(crypto::kSigLen);
    return keys + "  " + sigs;
}

const ScenarioStats* find_scenario(const BenchReport& report, const std::string& name) {
    for (const auto& s : report.scenarios)
        if (s.spec.name == name) return &s;
    return nullptr;
}

} // namespace

void print_report(const BenchReport& report, std::ostream& out) {
    out << std::fixed << std::setprecision(2);

    out << "== Scenarios ==\n";
    out << std::left << std::setw(34) << "name" << std::right << std::setw(6) << "runs" << std::setw(6) << "fail"
        << std::setw(12) << "mean[ms]" << std::setw(12) << "std[ms]" << std::setw(12) << "res[ms]" << std::setw(10)
        << "res c/s" << std::setw(14) << "bytes c->s" << std::setw(14) << "bytes s->c" << "\n";
    for (const auto& s : report.scenarios) {
        out << std::left << std::setw(34) << s.spec.name << std::right << std::setw(6) << s.runs << std::setw(6)
            << s.failures << std::setw(12) << s.mean_ms << std::setw(12) << s.stddev_ms << std::setw(12)
            << s.resolve_mean_ms << std::setw(7) << s.client_resolves_per_run << "/" << std::left << std::setw(2)
            << s.server_resolves_per_run << std::right << std::setw(14) << s.mean_bytes_client_to_server
            << std::setw(14) << s.mean_bytes_server_to_client << "\n";
    }

    out << "\n== Data sent by the server, unilateral handshake [bytes] ==\n";
    out << std::left << std::setw(18) << "" << std::setw(14) << "Total Bytes" << std::setw(20) << "pk  signature"
        << "tot\n";
    for (const char* name : {"uni-x509", "uni-vc-plain", "uni-vc-auth", "uni-vc-pinned"}) {
        if (const ScenarioStats* s = find_scenario(report, name)) {
            out << std::left << std::setw(18) << s->spec.name << std::setw(14)
                << static_cast<uint64_t>(s->mean_bytes_server_to_client) << std::setw(20)
                << pk_breakdown(s->pk_server_to_client) << s->pk_server_to_client.total() << "\n";
        }
    }

    out << "\n== Average handshake latency [ms] ==\n";
    out << std::left << std::setw(6) << "" << std::setw(14) << "" << std::setw(10) << "X.509" << std::setw(12)
        << "VC plain" << std::setw(12) << "VC auth" << std::setw(12) << "VC pinned" << "\n";
    auto latency_row = [&](const char* flow, const char* row, std::array<const char*, 4> names, bool resolve) {
        out << std::left << std::setw(6) << flow << std::setw(14) << row;
        for (const char* name : names) {
            const ScenarioStats* s = find_scenario(report, name);
            if (s)
                out << std::setw(resolve ? 12 : 10) << (resolve ? s->resolve_mean_ms : s->mean_ms);
            else
                out << std::setw(resolve ? 12 : 10) << "-";
        }
        out << "\n";
    };
    latency_row("UNI", "handshake", {"uni-x509", "uni-vc-plain", "uni-vc-auth", "uni-vc-pinned"}, false);
    latency_row("", "DID res.", {"uni-x509", "uni-vc-plain", "uni-vc-auth", "uni-vc-pinned"}, true);
    latency_row("MUT", "handshake", {"mut-x509", "mut-vc-plain", "mut-vc-auth", "mut-vc-pinned"}, false);
    latency_row("", "DID res.", {"mut-x509", "mut-vc-plain", "mut-vc-auth", "mut-vc-pinned"}, true);

    const ScenarioStats* h1 = find_scenario(report, "hybrid-client-x509-server-vc");
    const ScenarioStats* h2 = find_scenario(report, "hybrid-client-vc-server-x509");
    if (h1 || h2) {
        out << "\n== Hybrid handshakes [ms] ==\n";
        if (h1) out << std::left << std::setw(34) << "client X.509 / server VC" << h1->mean_ms << "\n";
        if (h2) out << std::left << std::setw(34) << "client VC / server X.509" << h2->mean_ms << "\n";
    }

    if (const ScenarioStats* f = find_scenario(report, "fallback-legacy-server")) {
        out << "\n== Fallback (server without RFC-7250) ==\n";
        out << "completed " << (f->runs - f->failures) << "/" << f->runs << ", mean " << f->mean_ms
            << " ms, resolves " << f->client_resolves_per_run << "/" << f->server_resolves_per_run << "\n";
    }

    bool any_violation = false;
    for (const auto& s : report.scenarios) {
        for (const std::string& v : s.violations) {
            if (!any_violation) out << "\n== LAW VIOLATIONS ==\n";
            any_violation = true;
            out << v << "\n";
        }
    }
    out << "\n" << (report.all_ok ? "all laws hold" : "LAW CHECK FAILED") << "\n";
}

void write_records(const BenchReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(Err::IoError, "cannot write records file " + path);
    for (const auto& s : report.scenarios) {
        nlohmann::json j = {
            {"scenario", s.spec.name},
            {"flow", s.spec.mutual ? "mutual" : "unilateral"},
            {"client_cred", handshake::credential_kind_name(s.spec.client_cred)},
            {"server_cred", handshake::credential_kind_name(s.spec.server_cred)},
            {"resolver", s.spec.resolver_mode == registry::ChannelMode::plain ? "plain" : "authenticated"},
            {"pinning", s.spec.pinning},
            {"server_rfc7250", s.spec.server_rfc7250},
            {"runs", s.runs},
            {"failures", s.failures},
            {"mean_latency_ms", s.mean_ms},
            {"stddev_latency_ms", s.stddev_ms},
            {"resolve_latency_ms", s.resolve_mean_ms},
            {"bytes_client_to_server", s.mean_bytes_client_to_server},
            {"bytes_server_to_client", s.mean_bytes_server_to_client},
            {"pk_object_bytes_client_to_server", s.pk_client_to_server.total()},
            {"pk_object_bytes_server_to_client", s.pk_server_to_client.total()},
            {"did_resolves_client", s.client_resolves_per_run},
            {"did_resolves_server", s.server_resolves_per_run},
            {"did_resolves_total", s.total_resolves},
            {"laws_ok", s.ok()},
        };
        out << j.dump() << "\n";
    }
}

} // namespace vctls::harness
