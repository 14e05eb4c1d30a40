// Copyright 2026 The vctls Authors
// SPDX-License-Identifier: Apache-2.0

#include "vctls/time.hpp"

#include <cstdio>
#include <ctime>

#include "vctls/errors.hpp"

namespace vctls {

std::string rfc3339_utc(UnixSeconds t) {
    std::time_t tt = static_cast<std::time_t>(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                  tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

UnixSeconds rfc3339_parse(const std::string& s) {
    std::tm tm{};
    char tail = 0;
    int n = std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &tm.tm_year, &tm.tm_mon, &tm.tm_mday, &tm.tm_hour,
                        &tm.tm_min, &tm.tm_sec, &tail);
    if (n != 7 || tail != 'Z' || s.size() != 20) raise(Err::SchemaViolation, "bad RFC-3339 timestamp: " + s);
    if (tm.tm_mon < 1 || tm.tm_mon > 12 || tm.tm_mday < 1 || tm.tm_mday > 31 || tm.tm_hour > 23 || tm.tm_min > 59 ||
        tm.tm_sec > 60)
        raise(Err::SchemaViolation, "out-of-range RFC-3339 timestamp: " + s);
    tm.tm_year -= 1900;
    tm.tm_mon -= 1;
    return static_cast<UnixSeconds>(timegm(&tm));
}

UnixSeconds now_utc() { return static_cast<UnixSeconds>(std::time(nullptr)); }

} // namespace vctls
