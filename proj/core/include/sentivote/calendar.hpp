#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sentivote::calendar {

// Days between 1970-01-01 and y-m-d in the proleptic Gregorian calendar.
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);

// Parses an RFC 3339 timestamp ("2012-10-01T12:34:56Z", fractional seconds
// and numeric offsets accepted) into seconds since the Unix epoch (UTC).
std::optional<std::int64_t> parse_rfc3339(const std::string& text);

// UTC day bucket of an epoch timestamp.
std::int64_t epoch_day(std::int64_t epoch_seconds);

// "YYYY-MM-DD" for a days-since-epoch value.
std::string format_day(std::int64_t epoch_days);

}  // namespace sentivote::calendar
