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

#include "platial/place.hpp"

#include "platial/error.hpp"

namespace platial {

void validate(const Place& p) {
  if (p.id.empty()) throw ValidationError("place id must not be empty");
  if (p.level < 0) {
    throw ValidationError("place '" + p.id + "' has a negative level");
  }
  if (p.parent.has_value() && p.parent->empty()) {
    throw ValidationError("place '" + p.id + "' has an empty parent id");
  }
  validate(p.time);
  if (p.lifecycle.dissolved_at.has_value() &&
      *p.lifecycle.dissolved_at < p.time.start) {
    throw ValidationError("place '" + p.id +
                          "' dissolves before this state begins");
  }
  if (p.geometry.has_value()) validate(*p.geometry);
  validate(p.meaning);
}

void validate(const SpaceTimeAnchor& a) {
  // Reuse the point geometry rules: finite coordinates, and degree bounds
  // when the frame is geographic.
  validate(Geometry::make_point(a.coord, a.crs));
  validate(a.time);
}

void validate_timeline(const PlaceTimeline& t) {
  if (t.empty()) throw ValidationError("timeline must not be empty");
  const std::string& id = t.front().id;
  TimestampMs prev = t.front().time.start;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Place& p = t[i];
    validate(p);
    if (p.id != id) {
      throw ValidationError("timeline mixes ids '" + id + "' and '" + p.id +
                            "'");
    }
    if (p.time.start < prev) {
      throw ValidationError("timeline '" + id +
                            "' states are not ordered by start time");
    }
    prev = p.time.start;
  }
}

std::string to_string(Instantiation i) {
  return i == Instantiation::Planned ? "planned" : "instantaneous";
}

Instantiation instantiation_from_string(const std::string& s) {
  if (s == "planned") return Instantiation::Planned;
  if (s == "instantaneous") return Instantiation::Instantaneous;
  throw ValidationError("unknown instantiation '" + s + "'");
}

}  // namespace platial
