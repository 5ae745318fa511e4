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

#ifndef PLATIAL_CLASSIFICATION_HPP
#define PLATIAL_CLASSIFICATION_HPP

#include <string>
#include <utility>

#include "platial/place.hpp"

namespace platial {

/// Does the crisp extent reshape over the timeline (beyond tolerance, with
/// displacement factored out)?
enum class Boundary { Dynamic, Static };

/// Is an end of life known in advance?
enum class Lifespan { Temporary, Permanent };

enum class LifespanStatus { Active, Dissolved };

/// Can the place move and keep its identity? Movable needs an observed
/// relocation that preserved the essence; Immovable needs the essence
/// explicitly bound to the location; otherwise undetermined.
enum class Movability { Movable, Immovable, Undetermined };

/// Fixed/changing footprint crossed with fixed/changing time: FT_FS one
/// snapshot in place, FT_CS one time but reshaped extent, CT_FS several
/// times over a fixed extent, CT_CS both varying.
enum class Construction { FT_FS, FT_CS, CT_FS, CT_CS };

/// Knobs for boundary and movability decisions.
struct ClassifyParams {
  double geom_tolerance = 0.05;       // relative shape-change threshold
  double min_displacement = 50.0;     // meters
  double essence_threshold = 0.6;     // min semantic similarity across a move
};

void validate(const ClassifyParams& p);

struct PlaceClassification {
  Boundary boundary = Boundary::Static;
  Lifespan lifespan = Lifespan::Permanent;
  LifespanStatus status = LifespanStatus::Active;
  Movability movability = Movability::Undetermined;
  Instantiation instantiation = Instantiation::Planned;
  Construction construction = Construction::FT_FS;

  bool operator==(const PlaceClassification&) const = default;
};

/// Classifies one timeline along all facets. The timeline must validate and
/// be non-empty.
PlaceClassification classify(const PlaceTimeline& t, const ClassifyParams& p);

/// Single-facet views of the same decision, for callers that only care
/// about one axis. Each agrees with the matching field of classify().
Boundary classify_boundary(const PlaceTimeline& t, const ClassifyParams& p);
std::pair<Lifespan, LifespanStatus> classify_lifespan(const PlaceTimeline& t);
Movability classify_movability(const PlaceTimeline& t,
                               const ClassifyParams& p);
Instantiation classify_instantiation(const PlaceTimeline& t);
Construction spacetime_construction(const PlaceTimeline& t,
                                    const ClassifyParams& p);

std::string to_string(Boundary b);
std::string to_string(Lifespan l);
std::string to_string(LifespanStatus s);
std::string to_string(Movability m);
std::string to_string(Construction c);
Boundary boundary_from_string(const std::string& s);
Lifespan lifespan_from_string(const std::string& s);
LifespanStatus lifespan_status_from_string(const std::string& s);
Movability movability_from_string(const std::string& s);
Construction construction_from_string(const std::string& s);

}  // namespace platial

#endif  // PLATIAL_CLASSIFICATION_HPP
