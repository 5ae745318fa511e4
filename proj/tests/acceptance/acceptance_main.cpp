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

// Release gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Each criterion pins its tolerances here so a regression cannot hide
// behind a loosened test.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "platial/classification.hpp"
#include "platial/error.hpp"
#include "platial/hierarchy.hpp"
#include "platial/io.hpp"
#include "platial/mobility.hpp"
#include "platial/place.hpp"
#include "platial/similarity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace platial;

namespace {

constexpr double kSymmetryTol = 1e-12;       // similarity symmetry
constexpr double kWeightScaleTol = 1e-12;    // weight-scaling invariance
constexpr double kDeviationTol = 1e-12;      // deviation case value
constexpr double kExtentAreaTol = 1e-9;      // derived extent area
constexpr double kSimilaritySecondsMax = 5.0;
constexpr double kTableSecondsMax = 1.0;
constexpr double kOracleSecondsMax = 30.0;
constexpr int kSimilarityPairs = 1000;
constexpr int kOracleTimelines = 500;

struct Criterion {
  int number;
  std::string label;
  double seconds_max;  // 0 means no limit
  std::function<void(std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& problems, bool ok,
            const std::string& what) {
  if (!ok) problems.push_back(what);
}

std::string fixture(const std::string& name) {
  return std::string(PLATIAL_FIXTURE_DIR) + "/" + name;
}

io::Json load(const std::string& name) {
  const std::string path = fixture(name);
  return io::parse_json(io::read_file(path), path);
}

// ---- criterion bodies ----

void similarity_properties(std::vector<std::string>& problems) {
  testgen::Rng rng;
  const SimilarityWeights w;
  const SimilarityScales s;
  int bad_symmetry = 0, bad_self = 0, bad_scaling = 0;
  for (int i = 0; i < kSimilarityPairs; ++i) {
    const Place a = testgen::random_place(rng, "a");
    const Place b = testgen::random_place(rng, "b");
    const double ab = platial_similarity(a, b, w, s);
    const double ba = platial_similarity(b, a, w, s);
    if (std::fabs(ab - ba) > kSymmetryTol) ++bad_symmetry;
    if (platial_similarity(a, a, w, s) != 1.0) ++bad_self;
    if (platial_similarity(b, b, w, s) != 1.0) ++bad_self;

    Meaning ma = a.meaning, mb = b.meaning;
    for (auto& [key, dim] : ma) dim.weight *= 10.0;
    for (auto& [key, dim] : mb) dim.weight *= 10.0;
    const double plain = semantic_distance(a.meaning, b.meaning);
    const double scaled = semantic_distance(ma, mb);
    if (std::fabs(plain - scaled) > kWeightScaleTol) ++bad_scaling;
  }
  expect(problems, bad_symmetry == 0,
         std::to_string(bad_symmetry) + " asymmetric pairs");
  expect(problems, bad_self == 0,
         std::to_string(bad_self) + " places not identical to themselves");
  expect(problems, bad_scaling == 0,
         std::to_string(bad_scaling) + " weight-scaling drifts");
}

void construction_cells(std::vector<std::string>& problems) {
  const io::TimelineFile f = io::parse_timeline_file(load("table3-canon.json"));
  const ClassifyParams params;
  std::map<std::string, Construction> got;
  for (const auto& e : f.timelines) {
    got[e.timeline.front().id] = classify(e.timeline, params).construction;
  }
  const std::map<std::string, Construction> want = {
      {"monument", Construction::FT_FS},
      {"shop-annex", Construction::FT_CS},
      {"civic-hall", Construction::CT_FS},
      {"relocated-mosque", Construction::CT_CS},
  };
  expect(problems, got.size() == want.size(), "unexpected timeline count");
  for (const auto& [id, cell] : want) {
    const auto it = got.find(id);
    if (it == got.end()) {
      problems.push_back("missing timeline " + id);
    } else if (it->second != cell) {
      problems.push_back(id + " classified as " + to_string(it->second));
    }
  }
}

void facet_labels(std::vector<std::string>& problems) {
  const io::TimelineFile f = io::parse_timeline_file(load("table1-canon.json"));
  const ClassifyParams params;
  std::map<std::string, PlaceClassification> got;
  for (const auto& e : f.timelines) {
    got[e.timeline.front().id] = classify(e.timeline, params);
  }
  auto check_label =
      [&](const std::string& id,
          const std::function<bool(const PlaceClassification&)>& pred,
          const std::string& wanted) {
        const auto it = got.find(id);
        if (it == got.end()) {
          problems.push_back("missing timeline " + id);
        } else if (!pred(it->second)) {
          problems.push_back(id + " is not " + wanted);
        }
      };
  check_label(
      "demonstration",
      [](const PlaceClassification& c) { return c.boundary == Boundary::Dynamic; },
      "dynamic");
  check_label(
      "check-post",
      [](const PlaceClassification& c) { return c.lifespan == Lifespan::Temporary; },
      "temporary");
  check_label(
      "kaaba",
      [](const PlaceClassification& c) { return c.movability == Movability::Immovable; },
      "immovable");
  check_label(
      "shop-move",
      [](const PlaceClassification& c) { return c.movability == Movability::Movable; },
      "movable");
  check_label(
      "accident",
      [](const PlaceClassification& c) {
        return c.instantiation == Instantiation::Instantaneous;
      },
      "instantaneous");
  check_label(
      "wtc",
      [](const PlaceClassification& c) {
        return c.lifespan == Lifespan::Permanent &&
               c.status == LifespanStatus::Dissolved;
      },
      "permanent and dissolved");
}

void oracle_equivalence(std::vector<std::string>& problems) {
  testgen::Rng rng;
  ClassifyParams strict;
  strict.geom_tolerance = 0.0;
  strict.min_displacement = 0.0;
  strict.essence_threshold = 1.0;
  int class_mismatch = 0, mobility_mismatch = 0;
  for (int i = 0; i < kOracleTimelines; ++i) {
    const PlaceTimeline t =
        testgen::random_timeline(rng, "t-" + std::to_string(i), 1, 6);
    const ClassifyParams p = i % 2 == 0 ? ClassifyParams{} : strict;
    if (!(classify(t, p) == oracle::classify(t, p))) ++class_mismatch;

    const DetectedMobility got = detect_mobility_events({t}, p);
    const DetectedMobility want =
        oracle::detect({t}, p, MobilityKind::Corporeal);
    bool same = got.events.size() == want.events.size() &&
                got.breaks.size() == want.breaks.size();
    for (std::size_t k = 0; same && k < got.events.size(); ++k) {
      const MobilityEvent &a = got.events[k], &b = want.events[k];
      same = a.place_id == b.place_id && a.from_state == b.from_state &&
             a.to_state == b.to_state && a.displacement == b.displacement &&
             a.essence_similarity == b.essence_similarity && a.kind == b.kind;
    }
    for (std::size_t k = 0; same && k < got.breaks.size(); ++k) {
      const EssenceBreak &a = got.breaks[k], &b = want.breaks[k];
      same = a.place_id == b.place_id && a.from_state == b.from_state &&
             a.to_state == b.to_state && a.displacement == b.displacement &&
             a.essence_similarity == b.essence_similarity;
    }
    if (!same) ++mobility_mismatch;
  }
  expect(problems, class_mismatch == 0,
         std::to_string(class_mismatch) + " classification mismatches");
  expect(problems, mobility_mismatch == 0,
         std::to_string(mobility_mismatch) + " mobility mismatches");
}

void retreat_case(std::vector<std::string>& problems) {
  const io::MilestoneFile f =
      io::parse_milestone_file(load("eferding-milestones.json"));
  const TimestampMs as_of = parse_timestamp("2019-12-31") + 86'399'999;
  const RelocationSummary s = summarize_relocation(f.tracks, as_of);
  expect(problems, s.n_tracks == 146,
         "eligible = " + std::to_string(s.n_tracks));
  const auto reached = [&](MilestoneKind k) -> std::size_t {
    const auto it = s.reached.find(k);
    return it == s.reached.end() ? 0 : it->second;
  };
  expect(problems, reached(MilestoneKind::ContractSigned) == 72,
         "signed = " + std::to_string(reached(MilestoneKind::ContractSigned)));
  expect(problems, reached(MilestoneKind::RemovalComplete) == 57,
         "moved = " + std::to_string(reached(MilestoneKind::RemovalComplete)));
  expect(problems, f.metadata["buildings"] == 612, "buildings metadata");
  expect(problems, f.metadata["housing_buildings"] == 138,
         "housing_buildings metadata");
  expect(problems, f.metadata["zone_area_km2"] == 24.35,
         "zone_area_km2 metadata");
}

void lake_case(std::vector<std::string>& problems) {
  const io::TimelineFile f =
      io::parse_timeline_file(load("attabad-timelines.json"));
  std::vector<PlaceTimeline> timelines;
  for (const auto& e : f.timelines) timelines.push_back(e.timeline);
  const DetectedMobility d = detect_mobility_events(timelines, {});
  const DisplacementSummary s = summarize_displacement(d);
  expect(problems, s.n_events == 380,
         "events = " + std::to_string(s.n_events));
  expect(problems, s.n_essence_breaks == 0,
         std::to_string(s.n_essence_breaks) + " essence breaks");

  // The moved families trace back to 240 submerged household places
  // spread over the 5 villages of the record file.
  std::set<std::string> households;
  for (const auto& e : f.timelines) {
    if (e.timeline.front().parent.has_value()) {
      households.insert(*e.timeline.front().parent);
    }
  }
  expect(problems, households.size() == 240,
         "households = " + std::to_string(households.size()));

  const io::RecordFile r = io::parse_record_file(load("attabad.json"));
  const PlaceHierarchy h = build_hierarchy(r.records);
  std::set<std::string> villages;
  for (const std::string& hh : households) {
    const auto it = h.nodes.find(hh);
    if (it == h.nodes.end() || !it->second.parent.has_value()) {
      problems.push_back("household " + hh + " is not in the record file");
      return;
    }
    villages.insert(*it->second.parent);
  }
  expect(problems, villages.size() == 5,
         "villages = " + std::to_string(villages.size()));
  expect(problems, places_at_level(h, 1).size() == 5,
         "village level count off");
}

void deviation_case(std::vector<std::string>& problems) {
  auto at = [](const char* who, double x) {
    PlaceReport r;
    r.respondent = who;
    r.coord = {x, 0.0};
    r.time = TimeSpec::instant(0);
    return r;
  };
  const SpaceTimeAnchor anchor{{0.0, 0.0}, TimeSpec::instant(0)};
  SimilarityScales scales;
  scales.spatial_scale = 2000.0;
  scales.temporal_scale = 3600.0;

  const std::vector<PlaceReport> near = {at("n1", 1000.0), at("n2", 1000.0)};
  const std::vector<PlaceReport> far = {at("f1", 2000.0), at("f2", 2000.0)};

  expect(problems, deviation(near, near, anchor, scales) == 0.0,
         "self deviation not exactly zero");
  expect(problems,
         variability(at("a0", 0.0), anchor, scales).magnitude() == 0.0,
         "report at the anchor has nonzero offset");
  const double d = deviation(near, far, anchor, scales);
  expect(problems, std::fabs(d - 0.5) <= kDeviationTol,
         "near/far deviation = " + std::to_string(d));
}

void risk_monotonicity(std::vector<std::string>& problems) {
  const RiskCombiner product = RiskCombiner::product();
  const RiskCombiner geometric = RiskCombiner::weighted_geometric(0.5, 0.3, 0.2);
  expect(problems, product(0.5, 0.5, 1.0) == 0.25,
         "product(0.5, 0.5, 1) is not exactly 0.25");

  int violations = 0;
  for (const RiskCombiner* c : {&product, &geometric}) {
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        for (int k = 0; k <= 10; ++k) {
          const double h = i / 10.0, e = j / 10.0, v = k / 10.0;
          const double base = (*c)(h, e, v);
          if (base < 0.0 || base > 1.0) ++violations;
          if (i < 10 && (*c)((i + 1) / 10.0, e, v) < base) ++violations;
          if (j < 10 && (*c)(h, (j + 1) / 10.0, v) < base) ++violations;
          if (k < 10 && (*c)(h, e, (k + 1) / 10.0) < base) ++violations;
        }
      }
    }
  }
  expect(problems, violations == 0,
         std::to_string(violations) + " monotonicity violations");
}

void hierarchy_checks(std::vector<std::string>& problems) {
  auto make = [](const char* id, int level, const char* parent) {
    Place p;
    p.id = id;
    p.level = level;
    if (parent != nullptr) p.parent = parent;
    p.time = TimeSpec::instant(0);
    return p;
  };
  Place root = make("root", 0, nullptr);
  Place left = make("left", 1, "root");
  left.geometry =
      Geometry::make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  Place right = make("right", 1, "root");
  right.geometry =
      Geometry::make_polygon({{5, 0}, {6, 0}, {6, 1}, {5, 1}, {5, 0}});

  const PlaceHierarchy h = build_hierarchy({root, left, right});
  const double a = area(derive_extent(h, "root"));
  expect(problems, std::fabs(a - 2.0) <= kExtentAreaTol,
         "derived extent area = " + std::to_string(a));

  Place a1 = make("a", 1, "b");
  Place b1 = make("b", 1, "a");
  bool threw = false;
  try {
    build_hierarchy({a1, b1});
  } catch (const ValidationError& e) {
    threw = std::string(e.what()).find("cycle") != std::string::npos;
  }
  expect(problems, threw, "two-node parent cycle not reported");
}

void cli_determinism(std::vector<std::string>& problems) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out1 = dir / ("platial_accept_1_" + std::to_string(getpid()));
  const fs::path out2 = dir / ("platial_accept_2_" + std::to_string(getpid()));
  const std::string base = std::string(PLATIAL_CLI_BIN) + " relocation " +
                           fixture("eferding-milestones.json") +
                           " --as-of 2019-12-31 --out ";
  auto run_once = [&](const fs::path& out) {
    const std::string cmd = base + out.string() + " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    return raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
  };
  if (!run_once(out1) || !run_once(out2)) {
    problems.push_back("relocation run failed");
    return;
  }
  auto strip_timestamp = [](const std::string& path) {
    std::istringstream in(io::read_file(path));
    std::ostringstream kept;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find("\"generated_at\"") == std::string::npos) {
        kept << line << "\n";
      }
    }
    return kept.str();
  };
  const std::string r1 = strip_timestamp(out1.string());
  const std::string r2 = strip_timestamp(out2.string());
  fs::remove(out1);
  fs::remove(out2);
  expect(problems, !r1.empty() && r1 == r2, "reports differ between runs");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "similarity symmetry, self-identity, weight scaling",
       kSimilaritySecondsMax, similarity_properties},
      {2, "construction matrix cells from canonical timelines",
       kTableSecondsMax, construction_cells},
      {3, "facet labels from canonical timelines", 0.0, facet_labels},
      {4, "classification and mobility match reference derivations",
       kOracleSecondsMax, oracle_equivalence},
      {5, "flood retreat counts and metadata", 0.0, retreat_case},
      {6, "landslide lake displacement counts", 0.0, lake_case},
      {7, "deviation zero point and near/far case", 0.0, deviation_case},
      {8, "risk combiners monotone on the unit grid", 0.0, risk_monotonicity},
      {9, "derived extents and cycle detection", 0.0, hierarchy_checks},
      {10, "deterministic reports modulo run timestamp", 0.0, cli_determinism},
  };

  int failures = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    std::vector<std::string> problems;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("threw: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.seconds_max > 0.0 && seconds > c.seconds_max) {
      std::ostringstream over;
      over.precision(2);
      over << std::fixed << "took " << seconds << " s, limit "
           << c.seconds_max << " s";
      problems.push_back(over.str());
    }
    if (problems.empty()) {
      std::printf("PASS criterion %d: %s\n", c.number, c.label.c_str());
    } else {
      ++failures;
      std::string joined;
      for (const std::string& p : problems) {
        if (!joined.empty()) joined += "; ";
        joined += p;
      }
      std::printf("FAIL criterion %d: %s (%s)\n", c.number, c.label.c_str(),
                  joined.c_str());
    }
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    suite_start)
          .count();
  std::printf("%d/%zu criteria passed in %.1f s\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
