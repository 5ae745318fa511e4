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

#include "platial/classification.hpp"

#include <cmath>

#include "platial/error.hpp"
#include "platial/meaning.hpp"

namespace platial {

void validate(const ClassifyParams& p) {
  if (!std::isfinite(p.geom_tolerance) || p.geom_tolerance < 0.0 ||
      p.geom_tolerance > 1.0) {
    throw ValidationError("geometry tolerance must lie in [0,1]");
  }
  if (!std::isfinite(p.min_displacement) || p.min_displacement < 0.0) {
    throw ValidationError("minimum displacement must be finite and >= 0");
  }
  if (!std::isfinite(p.essence_threshold) || p.essence_threshold < 0.0 ||
      p.essence_threshold > 1.0) {
    throw ValidationError("essence threshold must lie in [0,1]");
  }
}

PlaceClassification classify(const PlaceTimeline& t, const ClassifyParams& p) {
  validate_timeline(t);
  validate(p);

  PlaceClassification out;

  out.instantiation = t.front().lifecycle.instantiation;
  for (const Place& state : t) {
    if (state.lifecycle.instantiation != out.instantiation) {
      throw ValidationError("timeline '" + t.front().id +
                            "' states disagree on instantiation");
    }
  }

  bool planned_end = false, dissolved = false, essence_bound = false;
  for (const Place& state : t) {
    planned_end = planned_end || state.lifecycle.planned_end.has_value();
    dissolved = dissolved || state.lifecycle.dissolved_at.has_value();
    essence_bound =
        essence_bound || state.lifecycle.essence_bound_to_location;
  }
  out.lifespan = planned_end ? Lifespan::Temporary : Lifespan::Permanent;
  out.status = dissolved ? LifespanStatus::Dissolved : LifespanStatus::Active;

  // Pairwise scans over consecutive states that both carry a geometry.
  bool reshaped = false;       // shape change with displacement factored out
  bool footprint_moved = false;  // any extent change, displacement included
  bool essence_move = false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const Place& a = t[i];
    const Place& b = t[i + 1];
    if (!a.geometry.has_value() || !b.geometry.has_value()) continue;
    if (geometry_change(*a.geometry, *b.geometry, true) > p.geom_tolerance) {
      reshaped = true;
    }
    if (geometry_change(*a.geometry, *b.geometry, false) > p.geom_tolerance) {
      footprint_moved = true;
    }
    const double displacement = centroid_distance(*a.geometry, *b.geometry);
    if (displacement > p.min_displacement) {
      const double sim = 1.0 - semantic_distance(a.meaning, b.meaning);
      if (sim >= p.essence_threshold) essence_move = true;
    }
  }
  out.boundary = reshaped ? Boundary::Dynamic : Boundary::Static;
  if (essence_bound) {
    out.movability = Movability::Immovable;
  } else if (essence_move) {
    out.movability = Movability::Movable;
  } else {
    out.movability = Movability::Undetermined;
  }

  std::size_t distinct_times = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (t[j].time == t[i].time) {
        seen = true;
        break;
      }
    }
    if (!seen) ++distinct_times;
  }
  const bool changing_time = distinct_times >= 2;
  if (changing_time) {
    out.construction =
        footprint_moved ? Construction::CT_CS : Construction::CT_FS;
  } else {
    out.construction =
        footprint_moved ? Construction::FT_CS : Construction::FT_FS;
  }
  return out;
}

Boundary classify_boundary(const PlaceTimeline& t, const ClassifyParams& p) {
  return classify(t, p).boundary;
}

std::pair<Lifespan, LifespanStatus> classify_lifespan(const PlaceTimeline& t) {
  const PlaceClassification c = classify(t, ClassifyParams{});
  return {c.lifespan, c.status};
}

Movability classify_movability(const PlaceTimeline& t,
                               const ClassifyParams& p) {
  return classify(t, p).movability;
}

Instantiation classify_instantiation(const PlaceTimeline& t) {
  return classify(t, ClassifyParams{}).instantiation;
}

Construction spacetime_construction(const PlaceTimeline& t,
                                    const ClassifyParams& p) {
  return classify(t, p).construction;
}

std::string to_string(Boundary b) {
  return b == Boundary::Dynamic ? "dynamic" : "static";
}

std::string to_string(Lifespan l) {
  return l == Lifespan::Temporary ? "temporary" : "permanent";
}

std::string to_string(LifespanStatus s) {
  return s == LifespanStatus::Active ? "active" : "dissolved";
}

std::string to_string(Movability m) {
  switch (m) {
    case Movability::Movable:
      return "movable";
    case Movability::Immovable:
      return "immovable";
    case Movability::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::FT_FS:
      return "fixed-time-fixed-space";
    case Construction::FT_CS:
      return "fixed-time-changing-space";
    case Construction::CT_FS:
      return "changing-time-fixed-space";
    case Construction::CT_CS:
      return "changing-time-changing-space";
  }
  return "fixed-time-fixed-space";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "dynamic") return Boundary::Dynamic;
  if (s == "static") return Boundary::Static;
  throw ValidationError("unknown boundary class '" + s + "'");
}

Lifespan lifespan_from_string(const std::string& s) {
  if (s == "temporary") return Lifespan::Temporary;
  if (s == "permanent") return Lifespan::Permanent;
  throw ValidationError("unknown lifespan class '" + s + "'");
}

LifespanStatus lifespan_status_from_string(const std::string& s) {
  if (s == "active") return LifespanStatus::Active;
  if (s == "dissolved") return LifespanStatus::Dissolved;
  throw ValidationError("unknown lifespan status '" + s + "'");
}

Movability movability_from_string(const std::string& s) {
  if (s == "movable") return Movability::Movable;
  if (s == "immovable") return Movability::Immovable;
  if (s == "undetermined") return Movability::Undetermined;
  throw ValidationError("unknown movability class '" + s + "'");
}

Construction construction_from_string(const std::string& s) {
  if (s == "fixed-time-fixed-space") return Construction::FT_FS;
  if (s == "fixed-time-changing-space") return Construction::FT_CS;
  if (s == "changing-time-fixed-space") return Construction::CT_FS;
  if (s == "changing-time-changing-space") return Construction::CT_CS;
  throw ValidationError("unknown construction class '" + s + "'");
}

}  // namespace platial
