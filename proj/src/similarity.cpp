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

#include "platial/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "platial/error.hpp"

namespace platial {

namespace {

const Geometry& require_geometry(const Place& p) {
  if (!p.geometry.has_value()) {
    throw ValidationError("place '" + p.id +
                          "' needs a geometry for spatial comparison");
  }
  return *p.geometry;
}

double mean_magnitude(const std::vector<PlaceReport>& group,
                      const SpaceTimeAnchor& anchor,
                      const SimilarityScales& s) {
  if (group.empty()) {
    throw ValidationError("deviation needs non-empty report groups");
  }
  double sum = 0.0;
  for (const PlaceReport& r : group) {
    sum += variability(r, anchor, s).magnitude();
  }
  return sum / static_cast<double>(group.size());
}

}  // namespace

void validate(const SimilarityWeights& w) {
  for (double v : {w.spatial, w.temporal, w.semantic}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("similarity weights must be finite and >= 0");
    }
  }
  if (w.spatial + w.temporal + w.semantic <= 0.0) {
    throw ValidationError("similarity weights must not all be zero");
  }
}

void validate(const SimilarityScales& s) {
  if (!std::isfinite(s.spatial_scale) || s.spatial_scale <= 0.0 ||
      !std::isfinite(s.temporal_scale) || s.temporal_scale <= 0.0) {
    throw ValidationError("similarity scales must be finite and > 0");
  }
}

double platial_similarity(const Place& a, const Place& b,
                          const SimilarityWeights& w,
                          const SimilarityScales& s) {
  validate(a);
  validate(b);
  validate(w);
  validate(s);
  const Geometry& ga = require_geometry(a);
  const Geometry& gb = require_geometry(b);

  const double spatial_d =
      std::min(1.0, centroid_distance(ga, gb) / s.spatial_scale);
  const double temporal_d =
      std::min(1.0, temporal_gap(a.time, b.time) / s.temporal_scale);
  const double semantic_d = semantic_distance(a.meaning, b.meaning);

  const double sum = w.spatial + w.temporal + w.semantic;
  const double d = (w.spatial / sum) * spatial_d +
                   (w.temporal / sum) * temporal_d +
                   (w.semantic / sum) * semantic_d;
  return std::clamp(1.0 - d, 0.0, 1.0);
}

void validate(const PlaceReport& r) {
  if (!std::isfinite(r.coord.x) || !std::isfinite(r.coord.y)) {
    throw ValidationError("report coordinates must be finite");
  }
  validate(r.time);
  validate(r.meaning);
  for (const auto& [figure, label] :
       {std::pair{r.reported_distance, "distance"},
        std::pair{r.reported_duration, "duration"}}) {
    if (figure.has_value() && (!std::isfinite(*figure) || *figure <= 0.0)) {
      throw ValidationError(std::string("reported ") + label +
                            " must be positive and finite");
    }
  }
}

double VariabilityOffset::magnitude() const {
  return std::hypot(spatial, temporal);
}

VariabilityOffset variability(const PlaceReport& r,
                              const SpaceTimeAnchor& anchor,
                              const SimilarityScales& s) {
  validate(r);
  validate(anchor);
  validate(s);
  VariabilityOffset off;
  off.spatial = coord_distance(r.coord, anchor.coord, anchor.crs) /
                s.spatial_scale;
  off.temporal = temporal_gap(r.time, anchor.time) / s.temporal_scale;
  return off;
}

double deviation(const std::vector<PlaceReport>& x,
                 const std::vector<PlaceReport>& y,
                 const SpaceTimeAnchor& anchor, const SimilarityScales& s) {
  return std::abs(mean_magnitude(x, anchor, s) -
                  mean_magnitude(y, anchor, s));
}

PlatialObservables aggregate_reports(const std::vector<PlaceReport>& reports,
                                     const SpaceTimeAnchor& anchor) {
  if (reports.empty()) {
    throw ValidationError("cannot aggregate an empty report group");
  }
  validate(anchor);
  const double n = static_cast<double>(reports.size());

  PlatialObservables out;
  out.n_reports = reports.size();
  for (const PlaceReport& r : reports) {
    validate(r);
    out.mean_coord.x += r.coord.x / n;
    out.mean_coord.y += r.coord.y / n;
    out.mean_time_offset += temporal_gap(r.time, anchor.time) / n;
  }
  double sum_sq = 0.0;
  for (const PlaceReport& r : reports) {
    const double d = coord_distance(r.coord, out.mean_coord, anchor.crs);
    sum_sq += d * d;
  }
  out.coord_dispersion = std::sqrt(sum_sq / n);

  double sum_dist = 0.0, sum_speed = 0.0;
  std::size_t n_dist = 0, n_speed = 0;
  for (const PlaceReport& r : reports) {
    if (r.reported_distance.has_value()) {
      sum_dist += *r.reported_distance;
      ++n_dist;
    }
    if (r.reported_distance.has_value() && r.reported_duration.has_value()) {
      sum_speed += *r.reported_distance / *r.reported_duration;
      ++n_speed;
    }
  }
  if (n_dist > 0) {
    out.mean_reported_distance = sum_dist / static_cast<double>(n_dist);
  }
  if (n_speed > 0) out.mean_speed = sum_speed / static_cast<double>(n_speed);
  return out;
}

}  // namespace platial
