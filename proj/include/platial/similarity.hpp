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

#ifndef PLATIAL_SIMILARITY_HPP
#define PLATIAL_SIMILARITY_HPP

#include <optional>
#include <vector>

#include "platial/place.hpp"

namespace platial {

/// Relative importance of the spatial, temporal, and semantic components.
/// Weights are non-negative with a positive sum; only their ratios matter.
struct SimilarityWeights {
  double spatial = 1.0;
  double temporal = 1.0;
  double semantic = 1.0;
};

/// Scales that map raw distances onto [0,1]: a spatial offset of
/// spatial_scale meters or a temporal gap of temporal_scale seconds (or
/// more) counts as fully different in that component.
struct SimilarityScales {
  double spatial_scale = 1000.0;   // meters
  double temporal_scale = 3600.0;  // seconds
};

void validate(const SimilarityWeights& w);
void validate(const SimilarityScales& s);

/// Composite similarity in [0,1]: 1 minus the weighted mean of the clamped
/// spatial, temporal, and semantic distances. Identical states score exactly
/// 1. Both places need a geometry.
double platial_similarity(const Place& a, const Place& b,
                          const SimilarityWeights& w,
                          const SimilarityScales& s);

/// One sampled observation of a place: where and when the respondent put
/// it, what it means to them, and optionally how far away it is and how
/// long it takes them to get there.
struct PlaceReport {
  std::string respondent;
  Coord coord;
  TimeSpec time;
  Meaning meaning;
  std::optional<double> reported_distance;  // meters
  std::optional<double> reported_duration;  // seconds

  bool operator==(const PlaceReport&) const = default;
};

/// Reported figures, when present, must be positive and finite.
void validate(const PlaceReport& r);

/// Unitless offsets of one report against the anchor: spatial = coordinate
/// distance / spatial_scale, temporal = gap / temporal_scale, both
/// unclamped (a report may sit far beyond the scales). magnitude() is the
/// Euclidean norm of the two.
struct VariabilityOffset {
  double spatial = 0.0;
  double temporal = 0.0;

  double magnitude() const;
};

VariabilityOffset variability(const PlaceReport& r,
                              const SpaceTimeAnchor& anchor,
                              const SimilarityScales& s);

/// Absolute difference between the mean offset magnitudes of two report
/// groups against the same anchor. Zero for identical groups. Both groups
/// must be non-empty.
double deviation(const std::vector<PlaceReport>& x,
                 const std::vector<PlaceReport>& y,
                 const SpaceTimeAnchor& anchor, const SimilarityScales& s);

/// What a sampled population says about a place, reduced to point figures.
struct PlatialObservables {
  std::size_t n_reports = 0;
  Coord mean_coord;
  double coord_dispersion = 0.0;  // RMS distance to mean_coord, meters
  double mean_time_offset = 0.0;  // unsigned gap to the anchor, seconds
  std::optional<double> mean_reported_distance;  // meters
  std::optional<double> mean_speed;              // m/s, distance/duration
};

/// Reduces a non-empty report group. mean_speed averages the per-report
/// distance/duration ratios over reports carrying both figures and is
/// absent when none does; mean_reported_distance likewise.
PlatialObservables aggregate_reports(const std::vector<PlaceReport>& reports,
                                     const SpaceTimeAnchor& anchor);

}  // namespace platial

#endif  // PLATIAL_SIMILARITY_HPP
