// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0
//
// HTTP front for the ledger. GET /resolve/{method}/{id} returns the
// deterministic document serialization; authenticated mode adds an
// X-Registry-Signature header over (request path || body). POST /create
// registers a document (used by the genid verb).

#pragma once

#include <memory>
#include <string>
#include <thread>

#include "vctls/registry/resolver.hpp"

namespace vctls::registry {

class RegistryService {
public:
    RegistryService(std::shared_ptr<Ledger> ledger, ChannelMode mode,
                    std::optional<identity::KeyPair> registry_keys);
    ~RegistryService();

    RegistryService(const RegistryService&) = delete;
    RegistryService& operator=(const RegistryService&) = delete;

    bool listen(const std::string& host, int port); // blocking
    int start(const std::string& host);             // background thread, returns bound port
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
};

class HttpResolver : public Resolver {
public:
    explicit HttpResolver(std::string base_url); // e.g. "http://127.0.0.1:8425"
    ResolveResponse resolve(const identity::Did& did) override; // IoError on transport failure

private:
    std::string host_;
    int port_;
};

void http_create(const std::string& base_url, const identity::DidDocument& doc); // AlreadyExists, IoError

// Splits "http://host:port" into host and port. SchemaViolation otherwise.
std::pair<std::string, int> parse_base_url(const std::string& base_url);

} // namespace vctls::registry
