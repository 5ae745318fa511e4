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

#ifndef PLATIAL_PLACE_HPP
#define PLATIAL_PLACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "platial/geometry.hpp"
#include "platial/meaning.hpp"
#include "platial/time.hpp"

namespace platial {

/// Whether a place came into being at one moment (event-like) or was set up
/// deliberately over time.
enum class Instantiation { Planned, Instantaneous };

/// Lifecycle intent and bindings that are properties of the place itself
/// rather than of any one state.
struct Lifecycle {
  Instantiation instantiation = Instantiation::Planned;
  std::optional<TimestampMs> planned_end;  // known-in-advance end of life
  std::optional<TimestampMs> dissolved_at;
  /// Identity is tied to the spot: the place cannot move and stay itself.
  bool essence_bound_to_location = false;

  bool operator==(const Lifecycle&) const = default;
};

/// A place at one level of granularity: id, level, optional parent, the
/// observation time, an optional crisp extent, and weighted meaning.
struct Place {
  std::string id;
  int level = 0;  // 0 = coarsest
  std::optional<std::string> parent;
  TimeSpec time;
  std::optional<Geometry> geometry;
  Meaning meaning;
  Lifecycle lifecycle;

  bool operator==(const Place&) const = default;
};

/// Successive states of one place identity, ordered by state time.
using PlaceTimeline = std::vector<Place>;

/// A bare where-and-when reference, used as the fixed point that sampled
/// place reports are measured against.
struct SpaceTimeAnchor {
  Coord coord;
  TimeSpec time;
  Crs crs = Crs::PlanarM;

  bool operator==(const SpaceTimeAnchor&) const = default;
};

void validate(const Place& p);
void validate(const SpaceTimeAnchor& a);

/// Checks ids match, times are present and non-decreasing by start, and
/// every state validates.
void validate_timeline(const PlaceTimeline& t);

std::string to_string(Instantiation i);
Instantiation instantiation_from_string(const std::string& s);

}  // namespace platial

#endif  // PLATIAL_PLACE_HPP
