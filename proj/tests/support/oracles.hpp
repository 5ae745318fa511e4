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

// Reference re-derivations of the classification and mobility decisions,
// kept deliberately separate from the library logic: they tabulate the raw
// per-pair measurements first and read the labels off the table afterwards.
// Property tests compare the library against these bit for bit.

#ifndef PLATIAL_TESTS_ORACLES_HPP
#define PLATIAL_TESTS_ORACLES_HPP

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "platial/classification.hpp"
#include "platial/mobility.hpp"
#include "platial/place.hpp"

namespace oracle {

struct PairFacts {
  std::size_t from = 0;
  bool measurable = false;  // both states carry a geometry
  double aligned_change = 0.0;
  double raw_change = 0.0;
  double displacement = 0.0;
  double semantic = 0.0;
};

inline std::vector<PairFacts> tabulate(const platial::PlaceTimeline& t) {
  std::vector<PairFacts> facts;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    PairFacts f;
    f.from = i;
    if (t[i].geometry.has_value() && t[i + 1].geometry.has_value()) {
      f.measurable = true;
      f.aligned_change =
          platial::geometry_change(*t[i].geometry, *t[i + 1].geometry, true);
      f.raw_change =
          platial::geometry_change(*t[i].geometry, *t[i + 1].geometry, false);
      f.displacement =
          platial::centroid_distance(*t[i].geometry, *t[i + 1].geometry);
      f.semantic = platial::semantic_distance(t[i].meaning, t[i + 1].meaning);
    }
    facts.push_back(f);
  }
  return facts;
}

inline platial::PlaceClassification classify(
    const platial::PlaceTimeline& t, const platial::ClassifyParams& p) {
  const std::vector<PairFacts> facts = tabulate(t);

  platial::PlaceClassification c;
  c.instantiation = t.front().lifecycle.instantiation;

  bool temporary = false, dissolved = false, bound = false;
  for (const platial::Place& s : t) {
    if (s.lifecycle.planned_end.has_value()) temporary = true;
    if (s.lifecycle.dissolved_at.has_value()) dissolved = true;
    if (s.lifecycle.essence_bound_to_location) bound = true;
  }
  c.lifespan =
      temporary ? platial::Lifespan::Temporary : platial::Lifespan::Permanent;
  c.status = dissolved ? platial::LifespanStatus::Dissolved
                       : platial::LifespanStatus::Active;

  c.boundary = platial::Boundary::Static;
  for (const PairFacts& f : facts) {
    if (f.measurable && f.aligned_change > p.geom_tolerance) {
      c.boundary = platial::Boundary::Dynamic;
    }
  }

  if (bound) {
    c.movability = platial::Movability::Immovable;
  } else {
    c.movability = platial::Movability::Undetermined;
    for (const PairFacts& f : facts) {
      if (f.measurable && f.displacement > p.min_displacement &&
          1.0 - f.semantic >= p.essence_threshold) {
        c.movability = platial::Movability::Movable;
      }
    }
  }

  std::set<std::tuple<bool, platial::TimestampMs,
                      std::optional<platial::TimestampMs>>>
      times;
  for (const platial::Place& s : t) {
    times.insert({s.time.kind == platial::TimeSpec::Kind::Interval,
                  s.time.start, s.time.end});
  }
  bool moved = false;
  for (const PairFacts& f : facts) {
    if (f.measurable && f.raw_change > p.geom_tolerance) moved = true;
  }
  if (times.size() >= 2) {
    c.construction = moved ? platial::Construction::CT_CS
                           : platial::Construction::CT_FS;
  } else {
    c.construction = moved ? platial::Construction::FT_CS
                           : platial::Construction::FT_FS;
  }
  return c;
}

inline platial::DetectedMobility detect(
    const std::vector<platial::PlaceTimeline>& timelines,
    const platial::ClassifyParams& p, platial::MobilityKind kind) {
  platial::DetectedMobility out;
  for (const platial::PlaceTimeline& t : timelines) {
    for (const PairFacts& f : tabulate(t)) {
      if (!f.measurable || f.displacement <= p.min_displacement) continue;
      const double similarity = 1.0 - f.semantic;
      if (similarity >= p.essence_threshold) {
        out.events.push_back({t.front().id, f.from, f.from + 1,
                              f.displacement, similarity, kind});
      } else {
        out.breaks.push_back(
            {t.front().id, f.from, f.from + 1, f.displacement, similarity});
      }
    }
  }
  return out;
}

}  // namespace oracle

#endif  // PLATIAL_TESTS_ORACLES_HPP
