// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace vctls {

// Validity windows and clocks are plain Unix seconds; the clock used for
// validity checks is always injected by the caller, never read ambiently.
using UnixSeconds = int64_t;

std::string rfc3339_utc(UnixSeconds t);
UnixSeconds rfc3339_parse(const std::string& s); // SchemaViolation
UnixSeconds now_utc();

} // namespace vctls
