#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "tzdesk/error.hpp"

namespace tzdesk {

using BigInt = boost::multiprecision::cpp_int;
using Mutez = std::uint64_t;

constexpr Mutez kMutezPerTez = 1'000'000;

inline std::string to_hex(const unsigned char* data, size_t n)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xf]);
    }
    return out;
}

inline std::string to_hex(const std::string& bytes)
{
    return to_hex(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
}

inline std::string from_hex(std::string_view hex)
{
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0)
        fail(ErrorKind::DecodeError, "odd-length hex string");
    std::string out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            fail(ErrorKind::DecodeError, "non-hex character in input");
        out.push_back(static_cast<char>((hi << 4) | lo));
    }
    return out;
}

inline std::string dec(std::uint64_t v)
{
    return std::to_string(v);
}

inline std::uint64_t parse_u64(std::string_view s, const std::string& what = "number")
{
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        fail(ErrorKind::DecodeError, "invalid " + what + ": '" + std::string(s) + "'");
    return v;
}

// "1" -> 1000000, "0.05" -> 50000. Up to 6 fractional digits.
inline Mutez parse_tez(std::string_view s)
{
    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty())
        fail(ErrorKind::DecodeError, "empty tez amount");
    if (frac.size() > 6)
        fail(ErrorKind::DecodeError, "tez amount has more than 6 decimals: '" + std::string(s) + "'");
    std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, "tez amount");
    std::uint64_t f = 0;
    if (!frac.empty()) {
        std::string padded(frac);
        padded.resize(6, '0');
        f = parse_u64(padded, "tez fraction");
    }
    if (w > (UINT64_MAX - f) / kMutezPerTez)
        fail(ErrorKind::MutezOverflow, "tez amount out of range");
    return w * kMutezPerTez + f;
}

// 1000000 -> "1.000000"
inline std::string format_tez(Mutez m)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%llu.%06llu",
                  static_cast<unsigned long long>(m / kMutezPerTez),
                  static_cast<unsigned long long>(m % kMutezPerTez));
    return buf;
}

inline Mutez tez(std::uint64_t whole)
{
    return whole * kMutezPerTez;
}

// --- calendar <-> epoch seconds (proleptic Gregorian, UTC) ---

inline std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d)
{
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d)
{
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp < 10 ? mp + 3 : mp - 9;
    y += m <= 2;
}

// Accepts "2019-05-07 23:22:25+00:00", "2019-05-07T23:22:25Z" and the
// offset-less form (treated as UTC). Both ' ' and 'T' separate date and time.
inline std::int64_t parse_rfc3339(std::string_view s)
{
    int y, mo, d, h, mi, sec;
    int n = 0;
    if (std::sscanf(std::string(s).c_str(), "%d-%d-%d%*1[T ]%d:%d:%d%n", &y, &mo, &d, &h, &mi, &sec, &n) != 6)
        fail(ErrorKind::SyntaxError, "invalid timestamp: '" + std::string(s) + "'");
    std::string_view rest = s.substr(static_cast<size_t>(n));
    std::int64_t offset = 0;
    if (!rest.empty() && rest != "Z" && rest != "z") {
        int oh, om;
        char sign;
        if (std::sscanf(std::string(rest).c_str(), "%c%d:%d", &sign, &oh, &om) != 3 || (sign != '+' && sign != '-'))
            fail(ErrorKind::SyntaxError, "invalid timestamp offset: '" + std::string(s) + "'");
        offset = (sign == '-' ? -1 : 1) * (oh * 3600 + om * 60);
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 || sec < 0 || sec > 60)
        fail(ErrorKind::SyntaxError, "timestamp field out of range: '" + std::string(s) + "'");
    return days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d)) * 86400 + h * 3600 + mi * 60 + sec - offset;
}

inline std::string format_rfc3339(std::int64_t t)
{
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    std::int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), m, d,
                  static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline constexpr const char* kAnySignature = "ANY_SIGNATURE";

} // namespace tzdesk
