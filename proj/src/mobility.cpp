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

#include "platial/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "platial/error.hpp"
#include "platial/meaning.hpp"

namespace platial {

DetectedMobility detect_mobility_events(
    const std::vector<PlaceTimeline>& timelines, const ClassifyParams& p,
    MobilityKind kind) {
  validate(p);
  std::set<std::string> seen;
  DetectedMobility out;
  for (const PlaceTimeline& t : timelines) {
    validate_timeline(t);
    if (!seen.insert(t.front().id).second) {
      throw ValidationError("duplicate timeline id '" + t.front().id + "'");
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      const Place& a = t[i];
      const Place& b = t[i + 1];
      if (!a.geometry.has_value() || !b.geometry.has_value()) continue;
      const double displacement =
          centroid_distance(*a.geometry, *b.geometry);
      if (displacement <= p.min_displacement) continue;
      const double sim = 1.0 - semantic_distance(a.meaning, b.meaning);
      if (sim >= p.essence_threshold) {
        out.events.push_back({t.front().id, i, i + 1, displacement, sim, kind});
      } else {
        out.breaks.push_back({t.front().id, i, i + 1, displacement, sim});
      }
    }
  }
  return out;
}

DisplacementSummary summarize_displacement(const DetectedMobility& d) {
  DisplacementSummary s;
  std::set<std::string> places;
  for (const MobilityEvent& e : d.events) {
    places.insert(e.place_id);
    s.total_displacement += e.displacement;
    s.max_displacement = std::max(s.max_displacement, e.displacement);
  }
  for (const EssenceBreak& b : d.breaks) places.insert(b.place_id);
  s.n_places = places.size();
  s.n_events = d.events.size();
  s.n_essence_breaks = d.breaks.size();
  s.mean_displacement =
      s.n_events > 0 ? s.total_displacement / static_cast<double>(s.n_events)
                     : 0.0;
  return s;
}

DisplacementSummary summarize_displacement(
    const std::vector<PlaceTimeline>& timelines, const ClassifyParams& p,
    MobilityKind kind) {
  return summarize_displacement(detect_mobility_events(timelines, p, kind));
}

void validate(const RelocationTrack& t) {
  if (t.household_id.empty()) {
    throw ValidationError("relocation track needs a household id");
  }
  int prev_kind = -1;
  TimestampMs prev_at = 0;
  for (const Milestone& m : t.milestones) {
    const int k = static_cast<int>(m.kind);
    if (k == prev_kind) {
      throw ValidationError("track '" + t.household_id + "' repeats the " +
                            to_string(m.kind) + " milestone");
    }
    if (k < prev_kind) {
      throw ValidationError("track '" + t.household_id +
                            "' lists milestones out of order: " +
                            to_string(m.kind) + " cannot follow later stages");
    }
    if (prev_kind >= 0 && m.at < prev_at) {
      throw ValidationError("track '" + t.household_id + "' puts " +
                            to_string(m.kind) +
                            " before the preceding milestone in time");
    }
    prev_kind = k;
    prev_at = m.at;
  }
}

RelocationSummary summarize_relocation(
    const std::vector<RelocationTrack>& tracks,
    std::optional<TimestampMs> as_of) {
  std::set<std::string> seen;
  RelocationSummary s;
  s.n_tracks = tracks.size();
  for (const RelocationTrack& t : tracks) {
    validate(t);
    if (!seen.insert(t.household_id).second) {
      throw ValidationError("duplicate household id '" + t.household_id + "'");
    }
    ++s.by_mode[t.mode];
    for (const Milestone& m : t.milestones) {
      if (!as_of.has_value() || m.at <= *as_of) ++s.reached[m.kind];
    }
  }
  return s;
}

RiskCombiner::RiskCombiner(double wh, double we, double wv)
    : wh_(wh), we_(we), wv_(wv) {}

RiskCombiner RiskCombiner::product() { return RiskCombiner(1.0, 1.0, 1.0); }

RiskCombiner RiskCombiner::weighted_geometric(double wh, double we,
                                              double wv) {
  for (double w : {wh, we, wv}) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw ValidationError("risk weights must be finite and > 0");
    }
  }
  if (std::abs(wh + we + wv - 1.0) > 1e-9) {
    throw ValidationError("risk weights must sum to 1");
  }
  return RiskCombiner(wh, we, wv);
}

double RiskCombiner::operator()(double hazard, double exposure,
                                double vulnerability) const {
  for (double v : {hazard, exposure, vulnerability}) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw ValidationError("risk components must lie in [0,1]");
    }
  }
  if (wh_ == 1.0 && we_ == 1.0 && wv_ == 1.0) {
    return hazard * exposure * vulnerability;
  }
  return std::pow(hazard, wh_) * std::pow(exposure, we_) *
         std::pow(vulnerability, wv_);
}

void validate(const RiskProfile& r) {
  for (double v : {r.hazard, r.exposure, r.vulnerability}) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw ValidationError("risk components must lie in [0,1]");
    }
  }
}

double risk_score(const RiskProfile& r, const RiskCombiner& combiner) {
  return combiner(r.hazard, r.exposure, r.vulnerability);
}

std::vector<PlaceRisk> place_risk_overlay(
    const std::vector<Place>& places, const RiskCombiner& combiner,
    const std::string& hazard_key, const std::string& exposure_key,
    const std::string& vulnerability_key) {
  std::set<std::string> seen;
  std::vector<std::string> missing;
  std::vector<PlaceRisk> out;
  for (const Place& p : places) {
    validate(p);
    if (!seen.insert(p.id).second) {
      throw ValidationError("duplicate place id '" + p.id + "'");
    }
    double comps[3] = {0.0, 0.0, 0.0};
    const std::string* keys[3] = {&hazard_key, &exposure_key,
                                  &vulnerability_key};
    // A place with none of the keys just sits outside the overlay; a
    // partial or malformed set is a data error worth flagging.
    int absent = 0;
    for (int i = 0; i < 3; ++i) {
      if (p.meaning.find(*keys[i]) == p.meaning.end()) ++absent;
    }
    if (absent == 3) continue;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const auto it = p.meaning.find(*keys[i]);
      if (it == p.meaning.end() || it->second.kind != DimKind::Numeric ||
          it->second.range_lo != 0.0 || it->second.range_hi != 1.0) {
        missing.push_back(p.id + " (" + *keys[i] + ")");
        ok = false;
        continue;
      }
      comps[i] = std::get<double>(it->second.value);
    }
    if (!ok) continue;
    out.push_back(
        {p.id, comps[0], comps[1], comps[2],
         combiner(comps[0], comps[1], comps[2])});
  }
  if (!missing.empty()) {
    std::string msg =
        "places missing a numeric [0,1] risk component: " + missing.front();
    for (std::size_t i = 1; i < missing.size(); ++i) msg += ", " + missing[i];
    throw ValidationError(msg);
  }
  std::sort(out.begin(), out.end(),
            [](const PlaceRisk& a, const PlaceRisk& b) {
              return a.place_id < b.place_id;
            });
  return out;
}

std::string to_string(MobilityKind k) {
  switch (k) {
    case MobilityKind::Corporeal:
      return "corporeal";
    case MobilityKind::Object:
      return "object";
    case MobilityKind::Imaginative:
      return "imaginative";
    case MobilityKind::Virtual:
      return "virtual";
    case MobilityKind::Communicative:
      return "communicative";
  }
  return "corporeal";
}

MobilityKind mobility_kind_from_string(const std::string& s) {
  if (s == "corporeal") return MobilityKind::Corporeal;
  if (s == "object") return MobilityKind::Object;
  if (s == "imaginative") return MobilityKind::Imaginative;
  if (s == "virtual") return MobilityKind::Virtual;
  if (s == "communicative") return MobilityKind::Communicative;
  throw ValidationError("unknown mobility kind '" + s + "'");
}

std::string to_string(MilestoneKind k) {
  switch (k) {
    case MilestoneKind::DisasterOccurrence:
      return "disaster_occurrence";
    case MilestoneKind::ZoneDesignation:
      return "zone_designation";
    case MilestoneKind::AgreementDeadline:
      return "agreement_deadline";
    case MilestoneKind::ContractSigned:
      return "contract_signed";
    case MilestoneKind::RemovalComplete:
      return "removal_complete";
  }
  return "disaster_occurrence";
}

MilestoneKind milestone_kind_from_string(const std::string& s) {
  if (s == "disaster_occurrence") return MilestoneKind::DisasterOccurrence;
  if (s == "zone_designation") return MilestoneKind::ZoneDesignation;
  if (s == "agreement_deadline") return MilestoneKind::AgreementDeadline;
  if (s == "contract_signed") return MilestoneKind::ContractSigned;
  if (s == "removal_complete") return MilestoneKind::RemovalComplete;
  throw ValidationError("unknown milestone kind '" + s + "'");
}

std::string to_string(RelocationMode m) {
  return m == RelocationMode::Relocation ? "relocation" : "displacement";
}

RelocationMode relocation_mode_from_string(const std::string& s) {
  if (s == "relocation") return RelocationMode::Relocation;
  if (s == "displacement") return RelocationMode::Displacement;
  throw ValidationError("unknown relocation mode '" + s + "'");
}

}  // namespace platial
