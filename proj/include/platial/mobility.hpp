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

#ifndef PLATIAL_MOBILITY_HPP
#define PLATIAL_MOBILITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "platial/classification.hpp"
#include "platial/place.hpp"

namespace platial {

/// How something moves between places: bodies, goods, imagination, virtual
/// presence, or messages.
enum class MobilityKind { Corporeal, Object, Imaginative, Virtual, Communicative };

/// A relocation between consecutive states that kept the place's essence.
struct MobilityEvent {
  std::string place_id;
  std::size_t from_state = 0;  // index into the timeline
  std::size_t to_state = 0;
  double displacement = 0.0;        // meters between centroids
  double essence_similarity = 0.0;  // 1 - semantic distance
  MobilityKind kind = MobilityKind::Corporeal;
};

/// A displacement too semantically different to be the same place moving:
/// the identity broke instead.
struct EssenceBreak {
  std::string place_id;
  std::size_t from_state = 0;
  std::size_t to_state = 0;
  double displacement = 0.0;
  double essence_similarity = 0.0;
};

struct DetectedMobility {
  std::vector<MobilityEvent> events;
  std::vector<EssenceBreak> breaks;
};

/// Scans consecutive state pairs of each timeline: displacement beyond
/// min_displacement is a mobility event when the essence survives
/// (similarity >= essence_threshold), an essence break otherwise.
DetectedMobility detect_mobility_events(
    const std::vector<PlaceTimeline>& timelines, const ClassifyParams& p,
    MobilityKind kind = MobilityKind::Corporeal);

struct DisplacementSummary {
  std::size_t n_places = 0;
  std::size_t n_events = 0;
  std::size_t n_essence_breaks = 0;
  double total_displacement = 0.0;  // over events
  double mean_displacement = 0.0;
  double max_displacement = 0.0;
};

DisplacementSummary summarize_displacement(const DetectedMobility& d);

/// Detect-and-summarize in one step.
DisplacementSummary summarize_displacement(
    const std::vector<PlaceTimeline>& timelines, const ClassifyParams& p,
    MobilityKind kind = MobilityKind::Corporeal);

/// Stages of a managed retreat, in canonical order.
enum class MilestoneKind {
  DisasterOccurrence,
  ZoneDesignation,
  AgreementDeadline,
  ContractSigned,
  RemovalComplete,
};

/// Voluntary, compensated move versus a forced one.
enum class RelocationMode { Relocation, Displacement };

struct Milestone {
  MilestoneKind kind = MilestoneKind::DisasterOccurrence;
  TimestampMs at = 0;
};

/// One household's progress through the retreat stages. Milestones must
/// follow the canonical order with non-decreasing timestamps, at most one
/// of each kind.
struct RelocationTrack {
  std::string household_id;
  RelocationMode mode = RelocationMode::Relocation;
  std::vector<Milestone> milestones;
};

void validate(const RelocationTrack& t);

struct RelocationSummary {
  std::size_t n_tracks = 0;  // eligible households
  std::map<MilestoneKind, std::size_t> reached;  // milestone counts at as_of
  std::map<RelocationMode, std::size_t> by_mode;
};

/// Counts, per milestone kind, the tracks that reached it on or before
/// as_of (no cutoff when absent).
RelocationSummary summarize_relocation(
    const std::vector<RelocationTrack>& tracks,
    std::optional<TimestampMs> as_of = std::nullopt);

/// How hazard, exposure, and vulnerability combine into one risk score.
class RiskCombiner {
 public:
  static RiskCombiner product();
  /// Weighted geometric mean; weights must be positive and sum to 1.
  static RiskCombiner weighted_geometric(double wh, double we, double wv);

  double operator()(double hazard, double exposure, double vulnerability) const;

 private:
  RiskCombiner(double wh, double we, double wv);
  double wh_, we_, wv_;
};

/// One place's risk components, each in [0,1].
struct RiskProfile {
  double hazard = 0.0;
  double exposure = 0.0;
  double vulnerability = 0.0;
};

void validate(const RiskProfile& r);

/// Combined score for one profile, in [0,1].
double risk_score(const RiskProfile& r, const RiskCombiner& combiner);

struct PlaceRisk {
  std::string place_id;
  double hazard = 0.0;
  double exposure = 0.0;
  double vulnerability = 0.0;
  double risk = 0.0;
};

/// Reads the three components off each place's meaning (numeric dims on a
/// [0,1] range under the given keys) and combines them. Places carrying
/// none of the keys are left out of the overlay; places with a partial or
/// malformed set are rejected together in one error. Results sorted by id.
std::vector<PlaceRisk> place_risk_overlay(const std::vector<Place>& places,
                                          const RiskCombiner& combiner,
                                          const std::string& hazard_key,
                                          const std::string& exposure_key,
                                          const std::string& vulnerability_key);

std::string to_string(MobilityKind k);
MobilityKind mobility_kind_from_string(const std::string& s);
std::string to_string(MilestoneKind k);
MilestoneKind milestone_kind_from_string(const std::string& s);
std::string to_string(RelocationMode m);
RelocationMode relocation_mode_from_string(const std::string& s);

}  // namespace platial

#endif  // PLATIAL_MOBILITY_HPP
