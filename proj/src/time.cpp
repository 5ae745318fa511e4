// Copyright 2026 The platial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "platial/time.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <limits>

#include "platial/error.hpp"

namespace platial {

namespace {

constexpr std::int64_t kMsPerDay = 86'400'000;

bool all_digits(const std::string& s, std::size_t from, std::size_t count) {
  if (from + count > s.size()) return false;
  for (std::size_t i = from; i < from + count; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

int to_int(const std::string& s, std::size_t from, std::size_t count) {
  int v = 0;
  for (std::size_t i = from; i < from + count; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

[[noreturn]] void bad_timestamp(const std::string& s) {
  throw ValidationError("bad timestamp '" + s +
                        "': expected YYYY-MM-DD or "
                        "YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|-HH:MM)");
}

}  // namespace

TimeSpec TimeSpec::instant(TimestampMs at) {
  TimeSpec t;
  t.kind = Kind::Instant;
  t.start = at;
  return t;
}

TimeSpec TimeSpec::interval(TimestampMs start, std::optional<TimestampMs> end) {
  TimeSpec t;
  t.kind = Kind::Interval;
  t.start = start;
  t.end = end;
  return t;
}

void validate(const TimeSpec& t) {
  if (t.kind == TimeSpec::Kind::Instant) {
    if (t.end.has_value()) {
      throw ValidationError("instant time must not carry an end");
    }
    return;
  }
  if (t.end.has_value() && *t.end < t.start) {
    throw ValidationError("interval end " + format_timestamp(*t.end) +
                          " precedes start " + format_timestamp(t.start));
  }
}

double temporal_gap(const TimeSpec& a, const TimeSpec& b) {
  validate(a);
  validate(b);
  const double inf = std::numeric_limits<double>::infinity();
  auto span_end = [&](const TimeSpec& t) -> double {
    if (t.kind == TimeSpec::Kind::Instant) return static_cast<double>(t.start);
    return t.end.has_value() ? static_cast<double>(*t.end) : inf;
  };
  const double latest_start =
      static_cast<double>(std::max(a.start, b.start));
  const double earliest_end = std::min(span_end(a), span_end(b));
  const double gap_ms = latest_start - earliest_end;
  return gap_ms > 0.0 ? gap_ms / 1000.0 : 0.0;
}

TimestampMs parse_timestamp(const std::string& s) {
  // Date part: YYYY-MM-DD.
  if (s.size() < 10 || !all_digits(s, 0, 4) || s[4] != '-' ||
      !all_digits(s, 5, 2) || s[7] != '-' || !all_digits(s, 8, 2)) {
    bad_timestamp(s);
  }
  const int year = to_int(s, 0, 4);
  const int month = to_int(s, 5, 2);
  const int day = to_int(s, 8, 2);
  const std::chrono::year_month_day ymd{
      std::chrono::year{year}, std::chrono::month{unsigned(month)},
      std::chrono::day{unsigned(day)}};
  if (!ymd.ok()) {
    throw ValidationError("bad timestamp '" + s + "': no such calendar day");
  }
  const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
  std::int64_t ms = static_cast<std::int64_t>(days) * kMsPerDay;

  std::size_t i = 10;
  if (i == s.size()) return ms;  // bare date = midnight UTC

  if (s[i] != 'T' && s[i] != 't') bad_timestamp(s);
  ++i;
  if (!all_digits(s, i, 2) || s[i + 2] != ':' || !all_digits(s, i + 3, 2) ||
      s[i + 5] != ':' || !all_digits(s, i + 6, 2)) {
    bad_timestamp(s);
  }
  const int hh = to_int(s, i, 2);
  const int mm = to_int(s, i + 3, 2);
  const int ss = to_int(s, i + 6, 2);
  if (hh > 23 || mm > 59 || ss > 59) bad_timestamp(s);
  ms += (hh * 3'600'000LL) + (mm * 60'000LL) + (ss * 1'000LL);
  i += 8;

  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t digits = 0;
    std::int64_t frac = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (digits < 3) frac = frac * 10 + (s[i] - '0');
      ++digits;
      ++i;
    }
    if (digits == 0) bad_timestamp(s);
    while (digits < 3) {
      frac *= 10;
      ++digits;
    }
    ms += frac;
  }

  if (i >= s.size()) bad_timestamp(s);  // zone designator is required
  if (s[i] == 'Z' || s[i] == 'z') {
    if (i + 1 != s.size()) bad_timestamp(s);
    return ms;
  }
  if (s[i] != '+' && s[i] != '-') bad_timestamp(s);
  const int sign = s[i] == '+' ? 1 : -1;
  ++i;
  if (!all_digits(s, i, 2) || i + 5 != s.size() || s[i + 2] != ':' ||
      !all_digits(s, i + 3, 2)) {
    bad_timestamp(s);
  }
  const int oh = to_int(s, i, 2);
  const int om = to_int(s, i + 3, 2);
  if (oh > 23 || om > 59) bad_timestamp(s);
  return ms - sign * ((oh * 3'600'000LL) + (om * 60'000LL));
}

std::string format_timestamp(TimestampMs ms) {
  std::int64_t days = ms / kMsPerDay;
  std::int64_t rem = ms % kMsPerDay;
  if (rem < 0) {
    rem += kMsPerDay;
    --days;
  }
  const std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{days}}};
  const int hh = static_cast<int>(rem / 3'600'000);
  const int mm = static_cast<int>((rem / 60'000) % 60);
  const int ss = static_cast<int>((rem / 1'000) % 60);
  const int frac = static_cast<int>(rem % 1'000);

  char buf[40];
  if (frac == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  static_cast<int>(ymd.year()),
                  static_cast<int>(unsigned(ymd.month())),
                  static_cast<int>(unsigned(ymd.day())), hh, mm, ss);
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                  static_cast<int>(ymd.year()),
                  static_cast<int>(unsigned(ymd.month())),
                  static_cast<int>(unsigned(ymd.day())), hh, mm, ss, frac);
  }
  return buf;
}

std::string to_string(TimeSpec::Kind k) {
  return k == TimeSpec::Kind::Instant ? "instant" : "interval";
}

TimeSpec::Kind time_kind_from_string(const std::string& s) {
  if (s == "instant") return TimeSpec::Kind::Instant;
  if (s == "interval") return TimeSpec::Kind::Interval;
  throw ValidationError("unknown time kind '" + s + "'");
}

}  // namespace platial
