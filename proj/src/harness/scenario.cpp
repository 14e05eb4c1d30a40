// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/harness/scenario.hpp"

#include <fstream>
#include <sstream>

namespace vctls::harness {

using handshake::CredentialKind;

namespace {

CredentialKind parse_kind(const std::string& v, int line) {
    if (v == "vc") return CredentialKind::vc;
    if (v == "x509") return CredentialKind::x509;
    if (v == "rpk") return CredentialKind::raw_public_key;
    raise(Err::SchemaViolation, "line " + std::to_string(line) + ": unknown credential kind '" + v + "'");
}

bool parse_on_off(const std::string& v, int line) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    raise(Err::SchemaViolation, "line " + std::to_string(line) + ": expected on|off, got '" + v + "'");
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void apply(ScenarioSpec& spec, const std::string& key, const std::string& value, int line) {
    if (key == "name") spec.name = value;
    else if (key == "flow") {
        if (value == "unilateral") spec.mutual = false;
        else if (value == "mutual") spec.mutual = true;
        else raise(Err::SchemaViolation, "line " + std::to_string(line) + ": flow must be unilateral|mutual");
    } else if (key == "client_cred") spec.client_cred = parse_kind(value, line);
    else if (key == "server_cred") spec.server_cred = parse_kind(value, line);
    else if (key == "resolver") {
        if (value == "plain") spec.resolver_mode = registry::ChannelMode::plain;
        else if (value == "authenticated") spec.resolver_mode = registry::ChannelMode::authenticated;
        else raise(Err::SchemaViolation, "line " + std::to_string(line) + ": resolver must be plain|authenticated");
    } else if (key == "pinning") spec.pinning = parse_on_off(value, line);
    else if (key == "repetitions") {
        try {
            spec.repetitions = std::stoi(value);
        } catch (const std::exception&) {
            raise(Err::SchemaViolation, "line " + std::to_string(line) + ": bad repetitions '" + value + "'");
        }
    } else if (key == "transport") {
        if (value == "memory") spec.transport = ScenarioSpec::Transport::memory;
        else if (value == "tcp") spec.transport = ScenarioSpec::Transport::tcp;
        else raise(Err::SchemaViolation, "line " + std::to_string(line) + ": transport must be memory|tcp");
    } else if (key == "server_rfc7250") spec.server_rfc7250 = parse_on_off(value, line);
    else raise(Err::SchemaViolation, "line " + std::to_string(line) + ": unknown key '" + key + "'");
}

} // namespace

void validate(const ScenarioSpec& spec) {
    if (spec.repetitions < 1) raise(Err::SchemaViolation, spec.name + ": repetitions must be >= 1");
    if (!spec.server_rfc7250) {
        if (spec.server_cred != CredentialKind::x509)
            raise(Err::SchemaViolation, spec.name + ": a server without RFC-7250 support needs an X.509 chain");
        if (spec.mutual && spec.client_cred != CredentialKind::x509)
            raise(Err::SchemaViolation, spec.name + ": fallback mutual auth needs an X.509 client credential");
    }
}

std::vector<ScenarioSpec> parse_scenarios(std::istream& in) {
    std::vector<ScenarioSpec> specs;
    ScenarioSpec current;
    bool open = false;
    std::string raw;
    int line = 0;
    auto flush = [&] {
        if (open) {
            validate(current);
            specs.push_back(current);
            current = ScenarioSpec{};
            open = false;
        }
    };
    while (std::getline(in, raw)) {
        ++line;
        std::string text = trim(raw);
        if (size_t hash = text.find('#'); hash != std::string::npos) text = trim(text.substr(0, hash));
        if (text.empty()) {
            flush();
            continue;
        }
        size_t eq = text.find('=');
        if (eq == std::string::npos)
            raise(Err::SchemaViolation, "line " + std::to_string(line) + ": expected key=value, got '" + text + "'");
        apply(current, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line);
        open = true;
    }
    flush();
    if (specs.empty()) raise(Err::SchemaViolation, "scenario file contains no scenarios");
    return specs;
}

std::vector<ScenarioSpec> load_scenarios(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Err::IoError, "cannot open scenario file " + path);
    return parse_scenarios(in);
}

std::vector<ScenarioSpec> default_scenarios(int repetitions) {
    auto spec = [&](const std::string& name, bool mutual, CredentialKind client, CredentialKind server,
                    registry::ChannelMode mode, bool pinning, bool rfc7250 = true) {
        ScenarioSpec s;
        s.name = name;
        s.mutual = mutual;
        s.client_cred = client;
        s.server_cred = server;
        s.resolver_mode = mode;
        s.pinning = pinning;
        s.repetitions = repetitions;
        s.server_rfc7250 = rfc7250;
        return s;
    };
    using K = CredentialKind;
    auto plain = registry::ChannelMode::plain;
    auto auth = registry::ChannelMode::authenticated;
    return {
        spec("uni-x509", false, K::x509, K::x509, plain, false),
        spec("uni-vc-plain", false, K::x509, K::vc, plain, false),
        spec("uni-vc-auth", false, K::x509, K::vc, auth, false),
        spec("uni-vc-pinned", false, K::x509, K::vc, auth, true),
        spec("mut-x509", true, K::x509, K::x509, plain, false),
        spec("mut-vc-plain", true, K::vc, K::vc, plain, false),
        spec("mut-vc-auth", true, K::vc, K::vc, auth, false),
        spec("mut-vc-pinned", true, K::vc, K::vc, auth, true),
        spec("hybrid-client-x509-server-vc", true, K::x509, K::vc, auth, false),
        spec("hybrid-client-vc-server-x509", true, K::vc, K::x509, auth, false),
        spec("fallback-legacy-server", false, K::x509, K::x509, plain, false, /*rfc7250=*/false),
    };
}

} // namespace vctls::harness
