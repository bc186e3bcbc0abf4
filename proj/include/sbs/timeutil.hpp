#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sbs {

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

// Parses an ISO 8601 date or date-time: "YYYY-MM-DD", optionally followed
// by "THH:MM:SS" (or a space instead of 'T'), optional fractional seconds
// (truncated) and an optional trailing 'Z'. Numeric UTC offsets are not
// supported. Returns nullopt on malformed input.
std::optional<Timestamp> parse_iso8601(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(Timestamp ts);

// "YYYY-MM-DD" when the timestamp is midnight UTC, full form otherwise.
// Used for interval labels.
std::string format_interval_label(Timestamp ts);

// Half-open time range [start, end).
struct TimeInterval {
    Timestamp start = 0;
    Timestamp end = 0;

    bool contains(Timestamp ts) const { return ts >= start && ts < end; }
    std::string label() const { return format_interval_label(start); }

    bool operator==(const TimeInterval&) const = default;
};

} // namespace sbs
