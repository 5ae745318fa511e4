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

#ifndef PLATIAL_TIME_HPP
#define PLATIAL_TIME_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace platial {

/// Milliseconds since the Unix epoch, UTC.
using TimestampMs = std::int64_t;

/// A point or span in time. An interval without an end is open-ended.
struct TimeSpec {
  enum class Kind { Instant, Interval };

  Kind kind = Kind::Instant;
  TimestampMs start = 0;
  std::optional<TimestampMs> end;  // interval only

  static TimeSpec instant(TimestampMs at);
  static TimeSpec interval(TimestampMs start,
                           std::optional<TimestampMs> end = std::nullopt);

  bool operator==(const TimeSpec&) const = default;
};

void validate(const TimeSpec& t);

/// Smallest separation in seconds between two specs; 0 when they overlap
/// or touch. An open-ended interval extends to +infinity.
double temporal_gap(const TimeSpec& a, const TimeSpec& b);

/// RFC 3339 UTC, e.g. "2019-12-31T08:30:00Z" or "2019-12-31T08:30:00.250Z".
/// A bare date parses as midnight UTC.
TimestampMs parse_timestamp(const std::string& text);
std::string format_timestamp(TimestampMs ms);

std::string to_string(TimeSpec::Kind k);
TimeSpec::Kind time_kind_from_string(const std::string& s);

}  // namespace platial

#endif  // PLATIAL_TIME_HPP
