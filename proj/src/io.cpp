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

#include "platial/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "platial/error.hpp"

namespace platial::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError(path + ": " + msg);
}

void check_object(const Json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) fail(path, "unknown key '" + key + "'");
  }
}

const Json& require_key(const Json& j, const std::string& path,
                        const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const Json& j, const std::string& path,
                           const char* key) {
  const Json& v = require_key(j, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

double require_number(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

Coord coord_from_json(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) {
    fail(path, "expected a coordinate pair [x, y]");
  }
  return {require_number(v[0], path + "[0]"), require_number(v[1], path + "[1]")};
}

Json coord_to_json(const Coord& c) { return Json::array({c.x, c.y}); }

std::vector<Coord> ring_from_json(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of coordinate pairs");
  std::vector<Coord> ring;
  ring.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ring.push_back(coord_from_json(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return ring;
}

TimestampMs timestamp_from_json(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected an RFC 3339 timestamp string");
  try {
    return parse_timestamp(v.get<std::string>());
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

Meaning meaning_from_json(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of meaning dimensions");
  Meaning m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string dp = path + "[" + std::to_string(i) + "]";
    const Json& d = v[i];
    check_object(d, dp,
                 {"key", "kind", "value", "weight", "range", "levels",
                  "category"});
    const std::string key = require_string(d, dp, "key");
    if (m.count(key) != 0) fail(dp, "repeated meaning key '" + key + "'");

    MeaningDim dim;
    try {
      dim.kind = dim_kind_from_string(require_string(d, dp, "kind"));
    } catch (const ValidationError& e) {
      fail(dp + ".kind", e.what());
    }
    const Json& value = require_key(d, dp, "value");
    if (dim.kind == DimKind::Numeric) {
      dim.value = require_number(value, dp + ".value");
      const Json& range = require_key(d, dp, "range");
      if (!range.is_array() || range.size() != 2) {
        fail(dp + ".range", "expected [lo, hi]");
      }
      dim.range_lo = require_number(range[0], dp + ".range[0]");
      dim.range_hi = require_number(range[1], dp + ".range[1]");
    } else {
      if (!value.is_string()) fail(dp + ".value", "expected a string");
      dim.value = value.get<std::string>();
      if (d.contains("range")) fail(dp, "only numeric dimensions carry a range");
    }
    if (dim.kind == DimKind::Ordinal) {
      const Json& levels = require_key(d, dp, "levels");
      if (!levels.is_array()) fail(dp + ".levels", "expected an array");
      for (std::size_t k = 0; k < levels.size(); ++k) {
        if (!levels[k].is_string()) {
          fail(dp + ".levels[" + std::to_string(k) + "]", "expected a string");
        }
        dim.levels.push_back(levels[k].get<std::string>());
      }
    } else if (d.contains("levels")) {
      fail(dp, "only ordinal dimensions carry levels");
    }
    if (d.contains("weight")) {
      dim.weight = require_number(d["weight"], dp + ".weight");
    }
    if (d.contains("category")) {
      try {
        dim.category = dim_category_from_string(
            require_string(d, dp, "category"));
      } catch (const ValidationError& e) {
        fail(dp + ".category", e.what());
      }
    }
    try {
      platial::validate(key, dim);
    } catch (const ValidationError& e) {
      fail(dp, e.what());
    }
    m.emplace(key, std::move(dim));
  }
  return m;
}

Json meaning_to_json(const Meaning& m) {
  Json arr = Json::array();
  for (const auto& [key, dim] : m) {
    Json d = Json::object();
    d["key"] = key;
    d["kind"] = to_string(dim.kind);
    if (dim.kind == DimKind::Numeric) {
      d["value"] = std::get<double>(dim.value);
      d["range"] = Json::array({dim.range_lo, dim.range_hi});
    } else {
      d["value"] = std::get<std::string>(dim.value);
    }
    if (dim.kind == DimKind::Ordinal) {
      d["levels"] = dim.levels;
    }
    d["weight"] = dim.weight;
    if (dim.category.has_value()) d["category"] = to_string(*dim.category);
    arr.push_back(std::move(d));
  }
  return arr;
}

Lifecycle lifecycle_from_json(const Json& v, const std::string& path) {
  check_object(v, path,
               {"instantiation", "planned_end", "dissolved_at",
                "essence_bound_to_location"});
  Lifecycle lc;
  if (v.contains("instantiation")) {
    try {
      lc.instantiation =
          instantiation_from_string(require_string(v, path, "instantiation"));
    } catch (const ValidationError& e) {
      fail(path + ".instantiation", e.what());
    }
  }
  if (v.contains("planned_end")) {
    lc.planned_end = timestamp_from_json(v["planned_end"], path + ".planned_end");
  }
  if (v.contains("dissolved_at")) {
    lc.dissolved_at =
        timestamp_from_json(v["dissolved_at"], path + ".dissolved_at");
  }
  if (v.contains("essence_bound_to_location")) {
    const Json& b = v["essence_bound_to_location"];
    if (!b.is_boolean()) {
      fail(path + ".essence_bound_to_location", "expected a boolean");
    }
    lc.essence_bound_to_location = b.get<bool>();
  }
  return lc;
}

Json lifecycle_to_json(const Lifecycle& lc) {
  Json v = Json::object();
  v["instantiation"] = to_string(lc.instantiation);
  if (lc.planned_end.has_value()) {
    v["planned_end"] = format_timestamp(*lc.planned_end);
  }
  if (lc.dissolved_at.has_value()) {
    v["dissolved_at"] = format_timestamp(*lc.dissolved_at);
  }
  v["essence_bound_to_location"] = lc.essence_bound_to_location;
  return v;
}

// Shared body of a place record and of a timeline state; states take their
// id from the enclosing timeline.
Place place_body_from_json(const Json& j, Crs crs, const std::string& path,
                           std::string id) {
  Place p;
  p.id = std::move(id);
  if (j.contains("level")) {
    const Json& lv = j["level"];
    if (!lv.is_number_integer()) fail(path + ".level", "expected an integer");
    p.level = lv.get<int>();
  }
  if (j.contains("parent")) {
    const Json& pr = j["parent"];
    if (!pr.is_string()) fail(path + ".parent", "expected a string");
    p.parent = pr.get<std::string>();
  }
  p.time = timespec_from_json(require_key(j, path, "time"), path + ".time");
  if (j.contains("geometry")) {
    p.geometry = geometry_from_json(j["geometry"], crs, path + ".geometry");
  }
  if (j.contains("meaning")) {
    p.meaning = meaning_from_json(j["meaning"], path + ".meaning");
  }
  if (j.contains("lifecycle")) {
    p.lifecycle = lifecycle_from_json(j["lifecycle"], path + ".lifecycle");
  }
  try {
    platial::validate(p);
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return p;
}

Json place_body_to_json(const Place& p, bool with_id) {
  Json j = Json::object();
  if (with_id) j["id"] = p.id;
  j["level"] = p.level;
  if (p.parent.has_value()) j["parent"] = *p.parent;
  j["time"] = timespec_to_json(p.time);
  if (p.geometry.has_value()) j["geometry"] = geometry_to_json(*p.geometry);
  if (!p.meaning.empty()) j["meaning"] = meaning_to_json(p.meaning);
  if (!(p.lifecycle == Lifecycle{})) {
    j["lifecycle"] = lifecycle_to_json(p.lifecycle);
  }
  return j;
}

Json metadata_from_json(const Json& j, const std::string& path) {
  if (!j.contains("metadata")) return Json::object();
  const Json& m = j["metadata"];
  if (!m.is_object()) fail(path + ".metadata", "expected an object");
  return m;
}

std::string require_format_version(const Json& j, const std::string& path) {
  const std::string v = require_string(j, path, "format_version");
  if (v != kFormatVersion) {
    fail(path, "unsupported format_version '" + v + "'");
  }
  return v;
}

}  // namespace

TimeSpec timespec_from_json(const Json& j, const std::string& path) {
  check_object(j, path, {"kind", "start", "end"});
  TimeSpec t;
  try {
    t.kind = time_kind_from_string(require_string(j, path, "kind"));
  } catch (const ValidationError& e) {
    fail(path + ".kind", e.what());
  }
  t.start = timestamp_from_json(require_key(j, path, "start"), path + ".start");
  if (j.contains("end")) {
    t.end = timestamp_from_json(j["end"], path + ".end");
  }
  try {
    platial::validate(t);
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return t;
}

Json timespec_to_json(const TimeSpec& t) {
  Json j = Json::object();
  j["kind"] = to_string(t.kind);
  j["start"] = format_timestamp(t.start);
  if (t.end.has_value()) j["end"] = format_timestamp(*t.end);
  return j;
}

Geometry geometry_from_json(const Json& j, Crs crs, const std::string& path) {
  check_object(j, path, {"type", "xy", "ring", "parts"});
  Geometry::Kind kind;
  try {
    kind = geometry_kind_from_string(require_string(j, path, "type"));
  } catch (const ValidationError& e) {
    fail(path + ".type", e.what());
  }
  try {
    switch (kind) {
      case Geometry::Kind::Point:
        return Geometry::make_point(
            coord_from_json(require_key(j, path, "xy"), path + ".xy"), crs);
      case Geometry::Kind::Polygon:
        return Geometry::make_polygon(
            ring_from_json(require_key(j, path, "ring"), path + ".ring"), crs);
      case Geometry::Kind::Multi: {
        const Json& parts = require_key(j, path, "parts");
        if (!parts.is_array()) fail(path + ".parts", "expected an array");
        std::vector<Geometry> out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          out.push_back(geometry_from_json(
              parts[i], crs, path + ".parts[" + std::to_string(i) + "]"));
        }
        return Geometry::make_multi(std::move(out));
      }
    }
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;  // already carries the field path
    fail(path, what);
  }
  fail(path, "unknown geometry type");
}

Json geometry_to_json(const Geometry& g) {
  Json j = Json::object();
  j["type"] = to_string(g.kind);
  switch (g.kind) {
    case Geometry::Kind::Point:
      j["xy"] = coord_to_json(g.point);
      break;
    case Geometry::Kind::Polygon: {
      Json ring = Json::array();
      for (const Coord& c : g.ring) ring.push_back(coord_to_json(c));
      j["ring"] = std::move(ring);
      break;
    }
    case Geometry::Kind::Multi: {
      Json parts = Json::array();
      for (const Geometry& p : g.parts) parts.push_back(geometry_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

Place place_from_json(const Json& j, Crs crs, const std::string& path) {
  check_object(j, path,
               {"id", "level", "parent", "time", "geometry", "meaning",
                "lifecycle"});
  return place_body_from_json(j, crs, path, require_string(j, path, "id"));
}

Json place_to_json(const Place& p) { return place_body_to_json(p, true); }

RecordFile parse_record_file(const Json& j) {
  const std::string path = "$";
  check_object(j, path, {"format_version", "crs", "metadata", "records"});
  require_format_version(j, path);
  RecordFile f;
  try {
    f.crs = crs_from_string(require_string(j, path, "crs"));
  } catch (const ValidationError& e) {
    fail(path + ".crs", e.what());
  }
  f.metadata = metadata_from_json(j, path);
  const Json& records = require_key(j, path, "records");
  if (!records.is_array()) fail(path + ".records", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string rp = path + ".records[" + std::to_string(i) + "]";
    Place p = place_from_json(records[i], f.crs, rp);
    if (!seen.insert(p.id).second) fail(rp, "duplicate place id '" + p.id + "'");
    f.records.push_back(std::move(p));
  }
  return f;
}

TimelineFile parse_timeline_file(const Json& j) {
  const std::string path = "$";
  check_object(j, path, {"format_version", "crs", "metadata", "timelines"});
  require_format_version(j, path);
  TimelineFile f;
  try {
    f.crs = crs_from_string(require_string(j, path, "crs"));
  } catch (const ValidationError& e) {
    fail(path + ".crs", e.what());
  }
  f.metadata = metadata_from_json(j, path);
  const Json& timelines = require_key(j, path, "timelines");
  if (!timelines.is_array()) fail(path + ".timelines", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < timelines.size(); ++i) {
    const std::string tp = path + ".timelines[" + std::to_string(i) + "]";
    const Json& entry = timelines[i];
    check_object(entry, tp, {"place_id", "description", "states"});
    TimelineEntry te;
    const std::string id = require_string(entry, tp, "place_id");
    if (!seen.insert(id).second) fail(tp, "duplicate place id '" + id + "'");
    if (entry.contains("description")) {
      if (!entry["description"].is_string()) {
        fail(tp + ".description", "expected a string");
      }
      te.description = entry["description"].get<std::string>();
    }
    const Json& states = require_key(entry, tp, "states");
    if (!states.is_array()) fail(tp + ".states", "expected an array");
    for (std::size_t k = 0; k < states.size(); ++k) {
      const std::string sp = tp + ".states[" + std::to_string(k) + "]";
      check_object(states[k], sp,
                   {"level", "parent", "time", "geometry", "meaning",
                    "lifecycle"});
      te.timeline.push_back(place_body_from_json(states[k], f.crs, sp, id));
    }
    try {
      validate_timeline(te.timeline);
    } catch (const ValidationError& e) {
      fail(tp, e.what());
    }
    f.timelines.push_back(std::move(te));
  }
  return f;
}

MilestoneFile parse_milestone_file(const Json& j) {
  const std::string path = "$";
  check_object(j, path, {"format_version", "metadata", "tracks"});
  require_format_version(j, path);
  MilestoneFile f;
  f.metadata = metadata_from_json(j, path);
  const Json& tracks = require_key(j, path, "tracks");
  if (!tracks.is_array()) fail(path + ".tracks", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    const std::string tp = path + ".tracks[" + std::to_string(i) + "]";
    const Json& entry = tracks[i];
    check_object(entry, tp, {"household_id", "mode", "milestones"});
    RelocationTrack t;
    t.household_id = require_string(entry, tp, "household_id");
    if (!seen.insert(t.household_id).second) {
      fail(tp, "duplicate household id '" + t.household_id + "'");
    }
    try {
      t.mode = relocation_mode_from_string(require_string(entry, tp, "mode"));
    } catch (const ValidationError& e) {
      fail(tp + ".mode", e.what());
    }
    const Json& ms = require_key(entry, tp, "milestones");
    if (!ms.is_array()) fail(tp + ".milestones", "expected an array");
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const std::string mp = tp + ".milestones[" + std::to_string(k) + "]";
      check_object(ms[k], mp, {"kind", "at"});
      Milestone m;
      try {
        m.kind = milestone_kind_from_string(require_string(ms[k], mp, "kind"));
      } catch (const ValidationError& e) {
        fail(mp + ".kind", e.what());
      }
      m.at = timestamp_from_json(require_key(ms[k], mp, "at"), mp + ".at");
      t.milestones.push_back(m);
    }
    try {
      platial::validate(t);
    } catch (const ValidationError& e) {
      fail(tp, e.what());
    }
    f.tracks.push_back(std::move(t));
  }
  return f;
}

Json serialize(const RecordFile& f) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["crs"] = to_string(f.crs);
  if (!f.metadata.empty()) j["metadata"] = f.metadata;
  Json records = Json::array();
  for (const Place& p : f.records) records.push_back(place_to_json(p));
  j["records"] = std::move(records);
  return j;
}

Json serialize(const TimelineFile& f) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["crs"] = to_string(f.crs);
  if (!f.metadata.empty()) j["metadata"] = f.metadata;
  Json timelines = Json::array();
  for (const TimelineEntry& te : f.timelines) {
    Json entry = Json::object();
    entry["place_id"] = te.timeline.empty() ? "" : te.timeline.front().id;
    if (!te.description.empty()) entry["description"] = te.description;
    Json states = Json::array();
    for (const Place& p : te.timeline) {
      states.push_back(place_body_to_json(p, false));
    }
    entry["states"] = std::move(states);
    timelines.push_back(std::move(entry));
  }
  j["timelines"] = std::move(timelines);
  return j;
}

Json serialize(const MilestoneFile& f) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  if (!f.metadata.empty()) j["metadata"] = f.metadata;
  Json tracks = Json::array();
  for (const RelocationTrack& t : f.tracks) {
    Json entry = Json::object();
    entry["household_id"] = t.household_id;
    entry["mode"] = to_string(t.mode);
    Json ms = Json::array();
    for (const Milestone& m : t.milestones) {
      Json mj = Json::object();
      mj["kind"] = to_string(m.kind);
      mj["at"] = format_timestamp(m.at);
      ms.push_back(std::move(mj));
    }
    entry["milestones"] = std::move(ms);
    tracks.push_back(std::move(entry));
  }
  j["tracks"] = std::move(tracks);
  return j;
}

Json to_geojson(const Geometry& g) {
  Json j = Json::object();
  switch (g.kind) {
    case Geometry::Kind::Point:
      j["type"] = "Point";
      j["coordinates"] = coord_to_json(g.point);
      return j;
    case Geometry::Kind::Polygon: {
      j["type"] = "Polygon";
      Json ring = Json::array();
      for (const Coord& c : g.ring) ring.push_back(coord_to_json(c));
      j["coordinates"] = Json::array({std::move(ring)});
      return j;
    }
    case Geometry::Kind::Multi: {
      bool all_points = true, all_polygons = true;
      for (const Geometry& p : g.parts) {
        all_points = all_points && p.kind == Geometry::Kind::Point;
        all_polygons = all_polygons && p.kind == Geometry::Kind::Polygon;
      }
      if (all_points) {
        j["type"] = "MultiPoint";
        Json coords = Json::array();
        for (const Geometry& p : g.parts) coords.push_back(coord_to_json(p.point));
        j["coordinates"] = std::move(coords);
        return j;
      }
      if (all_polygons) {
        j["type"] = "MultiPolygon";
        Json coords = Json::array();
        for (const Geometry& p : g.parts) {
          Json ring = Json::array();
          for (const Coord& c : p.ring) ring.push_back(coord_to_json(c));
          coords.push_back(Json::array({std::move(ring)}));
        }
        j["coordinates"] = std::move(coords);
        return j;
      }
      j["type"] = "GeometryCollection";
      Json geoms = Json::array();
      for (const Geometry& p : g.parts) geoms.push_back(to_geojson(p));
      j["geometries"] = std::move(geoms);
      return j;
    }
  }
  return j;
}

Geometry geometry_from_geojson(const Json& j, Crs crs,
                               const std::string& path) {
  if (!j.is_object()) fail(path, "expected a GeoJSON object");
  const std::string type = require_string(j, path, "type");
  try {
    if (type == "Point") {
      return Geometry::make_point(
          coord_from_json(require_key(j, path, "coordinates"),
                          path + ".coordinates"),
          crs);
    }
    if (type == "Polygon") {
      const Json& coords = require_key(j, path, "coordinates");
      if (!coords.is_array() || coords.empty()) {
        fail(path + ".coordinates", "expected at least an outer ring");
      }
      if (coords.size() > 1) {
        fail(path + ".coordinates", "polygon holes are not supported");
      }
      return Geometry::make_polygon(
          ring_from_json(coords[0], path + ".coordinates[0]"), crs);
    }
    if (type == "MultiPoint" || type == "MultiPolygon") {
      const Json& coords = require_key(j, path, "coordinates");
      if (!coords.is_array()) fail(path + ".coordinates", "expected an array");
      std::vector<Geometry> parts;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        const std::string cp = path + ".coordinates[" + std::to_string(i) + "]";
        if (type == "MultiPoint") {
          parts.push_back(Geometry::make_point(coord_from_json(coords[i], cp), crs));
        } else {
          if (!coords[i].is_array() || coords[i].empty()) {
            fail(cp, "expected at least an outer ring");
          }
          if (coords[i].size() > 1) fail(cp, "polygon holes are not supported");
          parts.push_back(
              Geometry::make_polygon(ring_from_json(coords[i][0], cp + "[0]"), crs));
        }
      }
      return Geometry::make_multi(std::move(parts));
    }
    if (type == "GeometryCollection") {
      const Json& geoms = require_key(j, path, "geometries");
      if (!geoms.is_array()) fail(path + ".geometries", "expected an array");
      std::vector<Geometry> parts;
      for (std::size_t i = 0; i < geoms.size(); ++i) {
        parts.push_back(geometry_from_geojson(
            geoms[i], crs, path + ".geometries[" + std::to_string(i) + "]"));
      }
      return Geometry::make_multi(std::move(parts));
    }
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    fail(path, what);
  }
  fail(path, "unsupported GeoJSON type '" + type + "'");
}

FileType detect_file_type(const Json& j) {
  if (j.is_object()) {
    if (j.contains("records")) return FileType::Records;
    if (j.contains("timelines")) return FileType::Timelines;
    if (j.contains("tracks")) return FileType::Milestones;
  }
  throw ValidationError(
      "cannot tell the file type: expected a top-level 'records', "
      "'timelines', or 'tracks' key");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(origin + ": invalid JSON: " + e.what());
  }
}

}  // namespace platial::io
