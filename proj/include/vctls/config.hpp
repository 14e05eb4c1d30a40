// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vctls {

// Code points this artifact assigns where no registry value exists.
// The VC certificate type sits outside the registered 0..3 range; the
// did_methods extension uses private-use numbering. Both are overridable
// via a JSON config file.
struct CodePoints {
    uint8_t vc_certificate_type = 240;
    uint16_t did_methods_extension = 65280;
};

// Maps DID method names to the integer codes carried by the did_methods
// extension. Unknown codes decode fine but never match during negotiation.
class MethodRegistry {
public:
    static MethodRegistry built_in(); // {0: iota, 1: key, 2: web, 3: example}

    void add(uint16_t code, const std::string& name);
    std::optional<uint16_t> code_of(const std::string& name) const;
    std::optional<std::string> name_of(uint16_t code) const;
    bool has_name(const std::string& name) const { return code_of(name).has_value(); }
    std::vector<uint16_t> all_codes() const;

private:
    std::map<uint16_t, std::string> by_code_;
    std::map<std::string, uint16_t> by_name_;
};

struct ProtocolConfig {
    CodePoints points;
    MethodRegistry methods = MethodRegistry::built_in();

    static ProtocolConfig defaults() { return {}; }
    static ProtocolConfig load(const std::string& path); // JSON; throws IoError/SchemaViolation
};

} // namespace vctls
