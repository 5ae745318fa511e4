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

// Seeded random model objects for property tests. Meaning dimensions come
// from a fixed schema pool so that same-key dimensions always agree on
// their scale, which the distance ops require.

#ifndef PLATIAL_TESTS_GENERATORS_HPP
#define PLATIAL_TESTS_GENERATORS_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "platial/place.hpp"

namespace testgen {

inline constexpr std::uint32_t kSeed = 20260814;

class Rng {
 public:
  explicit Rng(std::uint32_t seed = kSeed) : engine_(seed) {}

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[static_cast<std::size_t>(uniform_int(0, int(pool.size()) - 1))];
  }

 private:
  std::mt19937 engine_;
};

inline const std::vector<std::string>& noise_levels() {
  static const std::vector<std::string> levels = {"quiet", "lively", "loud"};
  return levels;
}

inline const std::vector<std::string>& grade_levels() {
  static const std::vector<std::string> levels = {"poor", "fair", "good",
                                                  "great"};
  return levels;
}

// Weighted dimensions drawn from a fixed schema pool. min_weight > 0 keeps
// every dimension influential, which the distance-zero-iff-equal property
// needs.
inline platial::Meaning random_meaning(Rng& rng, double min_weight = 0.1) {
  using platial::MeaningDim;
  static const std::vector<std::string> uses = {"market", "school", "park",
                                                "depot", "cafe"};
  static const std::vector<std::string> notes = {"old", "new", "busy"};
  platial::Meaning m;
  auto w = [&] { return rng.uniform(min_weight, 3.0); };
  if (rng.chance(0.7)) {
    m.emplace("rent",
              MeaningDim::numeric(rng.uniform(0.0, 100.0), 0.0, 100.0, w()));
  }
  if (rng.chance(0.5)) {
    m.emplace("crowding",
              MeaningDim::numeric(rng.uniform(0.0, 10.0), 0.0, 10.0, w()));
  }
  if (rng.chance(0.6)) {
    m.emplace("noise",
              MeaningDim::ordinal(rng.pick(noise_levels()), noise_levels(), w()));
  }
  if (rng.chance(0.4)) {
    m.emplace("grade",
              MeaningDim::ordinal(rng.pick(grade_levels()), grade_levels(), w()));
  }
  if (rng.chance(0.8)) {
    m.emplace("use", MeaningDim::categorical(rng.pick(uses), w()));
  }
  if (rng.chance(0.3)) {
    m.emplace("note", MeaningDim::text(rng.pick(notes), w()));
  }
  return m;
}

// Star-shaped ring around a center: sorted angles with forced spacing keep
// it simple and give it real area.
inline platial::Geometry random_polygon(Rng& rng, platial::Coord center,
                                        double radius) {
  const int n = rng.uniform_int(3, 9);
  std::vector<platial::Coord> ring;
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi *
                         (static_cast<double>(i) + rng.uniform(0.1, 0.9)) /
                         static_cast<double>(n);
    const double r = rng.uniform(0.3 * radius, radius);
    ring.push_back({center.x + r * std::cos(angle),
                    center.y + r * std::sin(angle)});
  }
  return platial::Geometry::make_polygon(ring);
}

inline platial::Geometry random_geometry(Rng& rng) {
  const platial::Coord center = {rng.uniform(-5000.0, 5000.0),
                                 rng.uniform(-5000.0, 5000.0)};
  if (rng.chance(0.4)) return platial::Geometry::make_point(center);
  return random_polygon(rng, center, rng.uniform(5.0, 200.0));
}

inline platial::TimestampMs random_timestamp(Rng& rng) {
  // 2000-01-01 .. 2030-01-01, whole seconds
  return 946'684'800'000LL +
         static_cast<platial::TimestampMs>(rng.uniform_int(0, 946'000'000)) *
             1000LL;
}

inline platial::TimeSpec random_time(Rng& rng) {
  const platial::TimestampMs start = random_timestamp(rng);
  if (rng.chance(0.5)) return platial::TimeSpec::instant(start);
  if (rng.chance(0.25)) return platial::TimeSpec::interval(start);
  const platial::TimestampMs end =
      start + static_cast<platial::TimestampMs>(rng.uniform_int(0, 86'400)) *
                  1000LL;
  return platial::TimeSpec::interval(start, end);
}

inline platial::Place random_place(Rng& rng, std::string id,
                                   bool with_geometry = true) {
  platial::Place p;
  p.id = std::move(id);
  p.level = rng.uniform_int(0, 3);
  p.time = random_time(rng);
  if (with_geometry) {
    p.geometry = random_geometry(rng);
  } else if (rng.chance(0.85)) {
    p.geometry = random_geometry(rng);
  }
  p.meaning = random_meaning(rng);
  if (rng.chance(0.3)) {
    p.lifecycle.instantiation = platial::Instantiation::Instantaneous;
  }
  if (rng.chance(0.2)) {
    p.lifecycle.planned_end = p.time.start + 1'000'000;
  }
  if (rng.chance(0.15)) {
    p.lifecycle.dissolved_at = p.time.start + 2'000'000;
  }
  if (rng.chance(0.1)) p.lifecycle.essence_bound_to_location = true;
  return p;
}

// States share the id and the instantiation and are ordered by start time.
inline platial::PlaceTimeline random_timeline(Rng& rng, std::string id,
                                              int min_states = 1,
                                              int max_states = 5) {
  const int n = rng.uniform_int(min_states, max_states);
  const platial::Instantiation inst = rng.chance(0.3)
                                          ? platial::Instantiation::Instantaneous
                                          : platial::Instantiation::Planned;
  platial::TimestampMs clock = random_timestamp(rng);
  platial::PlaceTimeline t;
  for (int i = 0; i < n; ++i) {
    platial::Place p = random_place(rng, id, /*with_geometry=*/false);
    p.lifecycle.instantiation = inst;
    if (p.time.kind == platial::TimeSpec::Kind::Instant) {
      p.time = platial::TimeSpec::instant(clock);
    } else {
      std::optional<platial::TimestampMs> end = p.time.end;
      if (end.has_value()) {
        end = clock + static_cast<platial::TimestampMs>(
                          rng.uniform_int(0, 86'400)) *
                          1000LL;
      }
      p.time = platial::TimeSpec::interval(clock, end);
    }
    // The lifecycle marks were drawn against the pre-rebase time.
    if (p.lifecycle.planned_end.has_value()) {
      p.lifecycle.planned_end = p.time.start + 1'000'000;
    }
    if (p.lifecycle.dissolved_at.has_value()) {
      p.lifecycle.dissolved_at = p.time.start + 2'000'000;
    }
    clock += static_cast<platial::TimestampMs>(rng.uniform_int(0, 172'800)) *
             1000LL;
    t.push_back(std::move(p));
  }
  return t;
}

}  // namespace testgen

#endif  // PLATIAL_TESTS_GENERATORS_HPP
