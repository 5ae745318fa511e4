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

#ifndef PLATIAL_IO_HPP
#define PLATIAL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "platial/mobility.hpp"
#include "platial/place.hpp"

namespace platial::io {

/// Ordered JSON keeps serialization deterministic: keys come out in the
/// order they were inserted.
using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

/// Place records: a flat list of states, one per place id.
struct RecordFile {
  Crs crs = Crs::PlanarM;
  std::vector<Place> records;
  Json metadata = Json::object();
};

struct TimelineEntry {
  PlaceTimeline timeline;
  std::string description;  // optional free text carried through
};

/// Place timelines: successive states per place id.
struct TimelineFile {
  Crs crs = Crs::PlanarM;
  std::vector<TimelineEntry> timelines;
  Json metadata = Json::object();
};

/// Relocation tracks: per-household milestone sequences.
struct MilestoneFile {
  std::vector<RelocationTrack> tracks;
  Json metadata = Json::object();
};

RecordFile parse_record_file(const Json& j);
TimelineFile parse_timeline_file(const Json& j);
MilestoneFile parse_milestone_file(const Json& j);

Json serialize(const RecordFile& f);
Json serialize(const TimelineFile& f);
Json serialize(const MilestoneFile& f);

Json place_to_json(const Place& p);
Place place_from_json(const Json& j, Crs crs, const std::string& path);

Json geometry_to_json(const Geometry& g);
Geometry geometry_from_json(const Json& j, Crs crs, const std::string& path);

Json timespec_to_json(const TimeSpec& t);
TimeSpec timespec_from_json(const Json& j, const std::string& path);

/// GeoJSON bridge: Point / Polygon (no holes) / MultiPoint / MultiPolygon /
/// GeometryCollection of those.
Json to_geojson(const Geometry& g);
Geometry geometry_from_geojson(const Json& j, Crs crs,
                               const std::string& path);

enum class FileType { Records, Timelines, Milestones };

/// Looks at the top-level key ("records", "timelines", "tracks").
FileType detect_file_type(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Json parse_json(const std::string& text, const std::string& origin);

}  // namespace platial::io

#endif  // PLATIAL_IO_HPP
