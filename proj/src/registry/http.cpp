// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/registry/http.hpp"

#include <httplib.h>

namespace vctls::registry {

struct RegistryService::Impl {
    Impl(std::shared_ptr<Ledger> ledger, ChannelMode mode, std::optional<identity::KeyPair> keys)
        : ledger(std::move(ledger)), mode(mode), registry_keys(std::move(keys)) {
        if (mode == ChannelMode::authenticated && !registry_keys)
            throw std::invalid_argument("authenticated registry service requires a signing key");
        wire_routes();
    }

    void wire_routes() {
        server.Get(R"(/resolve/([a-z0-9]+)/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            identity::Did did{req.matches[1], req.matches[2]};
            LedgerResolver resolver(ledger, mode == ChannelMode::authenticated ? registry_keys : std::nullopt);
            ResolveResponse r = resolver.resolve(did);
            res.status = r.status;
            res.set_header("X-Registry-Version", std::to_string(r.version));
            if (r.status == 200) {
                if (!r.signature_hex.empty()) res.set_header("X-Registry-Signature", r.signature_hex);
                res.set_content(std::string(r.body.begin(), r.body.end()), "application/json");
            } else {
                res.set_content(r.status == 404 ? "{\"error\":\"NotFound\"}" : "{\"error\":\"Deactivated\"}",
                                "application/json");
            }
        });
        server.Post("/create", [this](const httplib::Request& req, httplib::Response& res) {
            try {
                identity::DidDocument doc =
                    identity::document_from_bytes(to_bytes(req.body));
                ledger->create(doc);
                res.status = 201;
                res.set_content("{\"created\":\"" + doc.id.str() + "\"}", "application/json");
            } catch (const Error& e) {
                if (e.code() == Err::AlreadyExists) {
                    res.status = 409;
                    res.set_content("{\"error\":\"AlreadyExists\"}", "application/json");
                } else {
                    res.status = 400;
                    res.set_content("{\"error\":\"SchemaViolation\"}", "application/json");
                }
            }
        });
    }

    std::shared_ptr<Ledger> ledger;
    ChannelMode mode;
    std::optional<identity::KeyPair> registry_keys;
    httplib::Server server;
};

RegistryService::RegistryService(std::shared_ptr<Ledger> ledger, ChannelMode mode,
                                 std::optional<identity::KeyPair> registry_keys)
    : impl_(std::make_unique<Impl>(std::move(ledger), mode, std::move(registry_keys))) {}

RegistryService::~RegistryService() { stop(); }

bool RegistryService::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int RegistryService::start(const std::string& host) {
    int port = impl_->server.bind_to_any_port(host);
    if (port <= 0) raise(Err::IoError, "cannot bind registry service on " + host);
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

void RegistryService::stop() {
    if (impl_) impl_->server.stop();
    if (thread_.joinable()) thread_.join();
}

HttpResolver::HttpResolver(std::string base_url) {
    auto [host, port] = parse_base_url(base_url);
    host_ = host;
    port_ = port;
}

ResolveResponse HttpResolver::resolve(const identity::Did& did) {
    httplib::Client client(host_, port_);
    client.set_connection_timeout(5);
    httplib::Result result = client.Get(resolve_request_id(did));
    if (!result) raise(Err::IoError, "registry request failed: " + httplib::to_string(result.error()));
    ResolveResponse resp;
    resp.status = result->status;
    resp.body = to_bytes(result->body);
    if (result->has_header("X-Registry-Signature")) resp.signature_hex = result->get_header_value("X-Registry-Signature");
    if (result->has_header("X-Registry-Version"))
        resp.version = std::stoull(result->get_header_value("X-Registry-Version"));
    return resp;
}

void http_create(const std::string& base_url, const identity::DidDocument& doc) {
    auto [host, port] = parse_base_url(base_url);
    httplib::Client client(host, port);
    client.set_connection_timeout(5);
    Bytes body = identity::canonical_bytes(doc);
    httplib::Result result = client.Post("/create", std::string(body.begin(), body.end()), "application/json");
    if (!result) raise(Err::IoError, "registry request failed: " + httplib::to_string(result.error()));
    if (result->status == 409) raise(Err::AlreadyExists, doc.id.str());
    if (result->status != 201) raise(Err::IoError, "registry create returned status " + std::to_string(result->status));
}

std::pair<std::string, int> parse_base_url(const std::string& base_url) {
    std::string rest = base_url;
    if (rest.rfind("http://", 0) == 0) rest = rest.substr(7);
    while (!rest.empty() && rest.back() == '/') rest.pop_back();
    size_t colon = rest.rfind(':');
    if (colon == std::string::npos || colon + 1 >= rest.size())
        raise(Err::SchemaViolation, "registry url must be http://host:port, got " + base_url);
    try {
        return {rest.substr(0, colon), std::stoi(rest.substr(colon + 1))};
    } catch (const std::exception&) {
        raise(Err::SchemaViolation, "bad registry port in " + base_url);
    }
}

} // namespace vctls::registry
