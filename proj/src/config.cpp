// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/config.hpp"

#include <fstream>

#include <json.hpp>

#include "vctls/errors.hpp"

namespace vctls {

MethodRegistry MethodRegistry::built_in() {
    MethodRegistry r;
    r.add(0, "iota");
    r.add(1, "key");
    r.add(2, "web");
    r.add(3, "example");
    return r;
}

void MethodRegistry::add(uint16_t code, const std::string& name) {
    by_code_[code] = name;
    by_name_[name] = code;
}

std::optional<uint16_t> MethodRegistry::code_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> MethodRegistry::name_of(uint16_t code) const {
    auto it = by_code_.find(code);
    if (it == by_code_.end()) return std::nullopt;
    return it->second;
}

std::vector<uint16_t> MethodRegistry::all_codes() const {
    std::vector<uint16_t> out;
    out.reserve(by_code_.size());
    for (const auto& [code, _] : by_code_) out.push_back(code);
    return out;
}

ProtocolConfig ProtocolConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Err::IoError, "cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("config parse: ") + e.what());
    }
    ProtocolConfig cfg;
    try {
        if (j.contains("vc_certificate_type")) cfg.points.vc_certificate_type = j["vc_certificate_type"].get<uint8_t>();
        if (j.contains("did_methods_extension"))
            cfg.points.did_methods_extension = j["did_methods_extension"].get<uint16_t>();
        if (j.contains("did_methods")) {
            MethodRegistry table;
            for (const auto& [name, code] : j["did_methods"].items()) table.add(code.get<uint16_t>(), name);
            cfg.methods = table;
        }
    } catch (const nlohmann::json::exception& e) {
        raise(Err::SchemaViolation, std::string("config fields: ") + e.what());
    }
    return cfg;
}

} // namespace vctls
