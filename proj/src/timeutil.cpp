#include "sbs/timeutil.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace sbs {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date
// (Howard Hinnant's algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += (m <= 2);
}

bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, unsigned& out) {
    if (pos + len > s.size()) return false;
    unsigned value = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        char c = s[i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    out = value;
    return true;
}

unsigned days_in_month(std::int64_t y, unsigned m) {
    static constexpr std::array<unsigned, 12> lengths =
        {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[m - 1];
}

} // namespace

std::optional<Timestamp> parse_iso8601(std::string_view text) {
    unsigned year = 0, month = 0, day = 0;
    if (!parse_uint(text, 0, 4, year)) return std::nullopt;
    if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    if (!parse_uint(text, 5, 2, month) || !parse_uint(text, 8, 2, day)) return std::nullopt;
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        return std::nullopt;

    unsigned hh = 0, mm = 0, ss = 0;
    std::size_t pos = 10;
    if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
        ++pos;
        if (!parse_uint(text, pos, 2, hh)) return std::nullopt;
        if (pos + 8 > text.size() || text[pos + 2] != ':' || text[pos + 5] != ':')
            return std::nullopt;
        if (!parse_uint(text, pos + 3, 2, mm) || !parse_uint(text, pos + 6, 2, ss))
            return std::nullopt;
        if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
        pos += 8;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
                return std::nullopt;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        }
    }
    if (pos < text.size() && text[pos] == 'Z') ++pos;
    if (pos != text.size()) return std::nullopt;

    return days_from_civil(year, month, day) * 86400 +
           static_cast<std::int64_t>(hh) * 3600 + mm * 60 + ss;
}

std::string format_iso8601(Timestamp ts) {
    std::int64_t days = ts / 86400;
    std::int64_t rem = ts % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    std::int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02u:%02u:%02uZ",
                  static_cast<long long>(y), m, d,
                  static_cast<unsigned>(rem / 3600),
                  static_cast<unsigned>((rem % 3600) / 60),
                  static_cast<unsigned>(rem % 60));
    return buf;
}

std::string format_interval_label(Timestamp ts) {
    std::string full = format_iso8601(ts);
    if (full.compare(10, 10, "T00:00:00Z") == 0) return full.substr(0, 10);
    return full.substr(0, 19);
}

} // namespace sbs
