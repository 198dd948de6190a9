// Copyright (c) the regaudit authors.
// Licensed under the Apache 2.0 License.

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace regaudit {

/// UTC instant at one-second resolution. All registration data timestamps
/// are reduced to this type.
using UtcInstant = std::chrono::sys_seconds;

inline UtcInstant utc_now() {
  return std::chrono::time_point_cast<std::chrono::seconds>(
      std::chrono::system_clock::now());
}

inline UtcInstant from_unix_seconds(std::int64_t secs) {
  return UtcInstant{std::chrono::seconds{secs}};
}

inline std::int64_t to_unix_seconds(UtcInstant t) {
  return t.time_since_epoch().count();
}

/// Build an instant from civil UTC fields. Returns nullopt when the fields
/// do not form a real calendar date/time.
inline std::optional<UtcInstant> from_civil(int year, unsigned month, unsigned day,
                                            unsigned hour = 0, unsigned minute = 0,
                                            unsigned second = 0) {
  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) return std::nullopt;
  if (hour > 23 || minute > 59 || second > 60) return std::nullopt;
  if (second == 60) second = 59;  // fold leap seconds
  sys_days sd{ymd};
  return UtcInstant{sd.time_since_epoch() + hours{hour} + minutes{minute} + seconds{second}};
}

struct CivilDate {
  int year;
  unsigned month;
  unsigned day;
  bool operator==(const CivilDate&) const = default;
};

inline CivilDate to_civil(UtcInstant t) {
  using namespace std::chrono;
  sys_days sd = floor<days>(t);
  year_month_day ymd{sd};
  return CivilDate{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

/// Calendar anniversary: same month and day one year later, clamped to the
/// last day of the month when the day does not exist (Feb 29 -> Feb 28).
inline CivilDate plus_one_calendar_year(CivilDate d) {
  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{d.year + 1}, std::chrono::month{d.month},
                     std::chrono::day{d.day}};
  if (!ymd.ok()) {
    year_month_day_last last{ymd.year(), month_day_last{ymd.month()}};
    ymd = year_month_day{last};
  }
  return CivilDate{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

/// Format as RFC 3339 with Z suffix, e.g. 1997-09-15T04:00:00Z.
inline std::string format_rfc3339(UtcInstant t) {
  using namespace std::chrono;
  sys_days sd = floor<days>(t);
  year_month_day ymd{sd};
  auto tod = t - sd;
  auto h = duration_cast<hours>(tod);
  auto m = duration_cast<minutes>(tod - h);
  auto s = duration_cast<seconds>(tod - h - m);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()),
                static_cast<long long>(h.count()), static_cast<long long>(m.count()),
                static_cast<long long>(s.count()));
  return buf;
}

namespace detail {

inline bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, unsigned& out) {
  if (pos + len > s.size()) return false;
  unsigned v = 0;
  for (std::size_t i = 0; i < len; ++i) {
    char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

/// Parse an RFC 3339 timestamp: YYYY-MM-DDTHH:MM:SS with optional
/// fractional seconds (discarded) and either "Z" or a +-HH:MM offset.
/// A lowercase 't'/'z' and a space separator are tolerated. With
/// `assume_utc_when_zoneless`, a missing zone designator is read as UTC
/// (WHOIS text frequently omits it; RDAP parsing stays strict).
inline std::optional<UtcInstant> parse_rfc3339(std::string_view s,
                                               bool assume_utc_when_zoneless = false) {
  unsigned y, mo, d, h, mi, se;
  if (!detail::parse_uint(s, 0, 4, y)) return std::nullopt;
  if (s.size() < 19 || s[4] != '-' || s[7] != '-') return std::nullopt;
  if (!detail::parse_uint(s, 5, 2, mo) || !detail::parse_uint(s, 8, 2, d)) return std::nullopt;
  char sep = s[10];
  if (sep != 'T' && sep != 't' && sep != ' ') return std::nullopt;
  if (s[13] != ':' || s[16] != ':') return std::nullopt;
  if (!detail::parse_uint(s, 11, 2, h) || !detail::parse_uint(s, 14, 2, mi) ||
      !detail::parse_uint(s, 17, 2, se))
    return std::nullopt;
  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
  }
  std::int64_t offset = 0;
  if (pos >= s.size()) {
    if (!assume_utc_when_zoneless) return std::nullopt;
    auto base = from_civil(static_cast<int>(y), mo, d, h, mi, se);
    if (!base) return std::nullopt;
    return *base;
  }
  char z = s[pos];
  if (z == 'Z' || z == 'z') {
    ++pos;
  } else if (z == '+' || z == '-') {
    unsigned oh, om;
    if (pos + 6 > s.size() || s[pos + 3] != ':') return std::nullopt;
    if (!detail::parse_uint(s, pos + 1, 2, oh) || !detail::parse_uint(s, pos + 4, 2, om))
      return std::nullopt;
    if (oh > 23 || om > 59) return std::nullopt;
    offset = static_cast<std::int64_t>(oh) * 3600 + om * 60;
    if (z == '-') offset = -offset;
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  auto base = from_civil(static_cast<int>(y), mo, d, h, mi, se);
  if (!base) return std::nullopt;
  return *base - std::chrono::seconds{offset};
}

}  // namespace regaudit
