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

#include "platial/meaning.hpp"

#include <algorithm>
#include <cmath>

#include "platial/error.hpp"

namespace platial {

namespace {

double rank_of(const std::string& value, const std::vector<std::string>& levels) {
  const auto it = std::find(levels.begin(), levels.end(), value);
  return static_cast<double>(it - levels.begin());
}

// Distance between two values of one dimension, in [0,1]. Both sides have
// already validated, so the variant alternatives are the expected ones.
double dim_distance(const std::string& key, const MeaningDim& a,
                    const MeaningDim& b) {
  if (a.kind != b.kind) {
    throw ValidationError("meaning key '" + key + "' mixes kinds " +
                          to_string(a.kind) + " and " + to_string(b.kind));
  }
  switch (a.kind) {
    case DimKind::Numeric: {
      if (a.range_lo != b.range_lo || a.range_hi != b.range_hi) {
        throw ValidationError("meaning key '" + key +
                              "' declares different numeric ranges");
      }
      const double va = std::get<double>(a.value);
      const double vb = std::get<double>(b.value);
      return std::min(1.0, std::abs(va - vb) / (a.range_hi - a.range_lo));
    }
    case DimKind::Ordinal: {
      if (a.levels != b.levels) {
        throw ValidationError("meaning key '" + key +
                              "' declares different ordinal levels");
      }
      if (a.levels.size() < 2) return 0.0;
      const double ra = rank_of(std::get<std::string>(a.value), a.levels);
      const double rb = rank_of(std::get<std::string>(b.value), b.levels);
      return std::abs(ra - rb) / static_cast<double>(a.levels.size() - 1);
    }
    case DimKind::Categorical:
    case DimKind::Text:
      return std::get<std::string>(a.value) == std::get<std::string>(b.value)
                 ? 0.0
                 : 1.0;
  }
  return 1.0;
}

}  // namespace

MeaningDim MeaningDim::numeric(double value, double lo, double hi,
                               double weight) {
  MeaningDim d;
  d.kind = DimKind::Numeric;
  d.value = value;
  d.weight = weight;
  d.range_lo = lo;
  d.range_hi = hi;
  return d;
}

MeaningDim MeaningDim::ordinal(std::string value,
                               std::vector<std::string> levels, double weight) {
  MeaningDim d;
  d.kind = DimKind::Ordinal;
  d.value = std::move(value);
  d.weight = weight;
  d.levels = std::move(levels);
  return d;
}

MeaningDim MeaningDim::categorical(std::string value, double weight) {
  MeaningDim d;
  d.kind = DimKind::Categorical;
  d.value = std::move(value);
  d.weight = weight;
  return d;
}

MeaningDim MeaningDim::text(std::string value, double weight) {
  MeaningDim d;
  d.kind = DimKind::Text;
  d.value = std::move(value);
  d.weight = weight;
  return d;
}

void validate(const std::string& key, const MeaningDim& dim) {
  if (key.empty()) throw ValidationError("meaning key must not be empty");
  if (!std::isfinite(dim.weight) || dim.weight < 0.0) {
    throw ValidationError("meaning key '" + key +
                          "' needs a finite non-negative weight");
  }
  switch (dim.kind) {
    case DimKind::Numeric: {
      if (!std::holds_alternative<double>(dim.value)) {
        throw ValidationError("meaning key '" + key +
                              "' is numeric but holds text");
      }
      if (!std::isfinite(dim.range_lo) || !std::isfinite(dim.range_hi) ||
          !(dim.range_lo < dim.range_hi)) {
        throw ValidationError("meaning key '" + key +
                              "' needs a finite range with lo < hi");
      }
      const double v = std::get<double>(dim.value);
      if (!std::isfinite(v) || v < dim.range_lo || v > dim.range_hi) {
        throw ValidationError("meaning key '" + key +
                              "' value outside its declared range");
      }
      return;
    }
    case DimKind::Ordinal: {
      if (!std::holds_alternative<std::string>(dim.value)) {
        throw ValidationError("meaning key '" + key +
                              "' is ordinal but holds a number");
      }
      if (dim.levels.empty()) {
        throw ValidationError("meaning key '" + key + "' needs ordinal levels");
      }
      for (std::size_t i = 0; i < dim.levels.size(); ++i) {
        for (std::size_t j = i + 1; j < dim.levels.size(); ++j) {
          if (dim.levels[i] == dim.levels[j]) {
            throw ValidationError("meaning key '" + key +
                                  "' repeats ordinal level '" + dim.levels[i] +
                                  "'");
          }
        }
      }
      const std::string& v = std::get<std::string>(dim.value);
      if (std::find(dim.levels.begin(), dim.levels.end(), v) ==
          dim.levels.end()) {
        throw ValidationError("meaning key '" + key + "' value '" + v +
                              "' is not one of its ordinal levels");
      }
      return;
    }
    case DimKind::Categorical:
    case DimKind::Text:
      if (!std::holds_alternative<std::string>(dim.value)) {
        throw ValidationError("meaning key '" + key +
                              "' holds a number but is not numeric");
      }
      return;
  }
  throw ValidationError("meaning key '" + key + "' has an unknown kind");
}

void validate(const Meaning& m) {
  bool any_weight = m.empty();
  for (const auto& [key, dim] : m) {
    validate(key, dim);
    any_weight = any_weight || dim.weight > 0.0;
  }
  if (!any_weight) {
    throw ValidationError(
        "meaning vector needs at least one dimension with weight > 0");
  }
}

double semantic_distance(const Meaning& a, const Meaning& b) {
  validate(a);
  validate(b);
  double sum_w = 0.0;
  double sum_wd = 0.0;
  // std::map keeps keys sorted, so a two-sided merge visits the key union in
  // one deterministic order.
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum_w += ia->second.weight;
      sum_wd += ia->second.weight;  // present on one side only: d = 1
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum_w += ib->second.weight;
      sum_wd += ib->second.weight;
      ++ib;
    } else {
      const double w = (ia->second.weight + ib->second.weight) / 2.0;
      sum_w += w;
      sum_wd += w * dim_distance(ia->first, ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  if (sum_w <= 0.0) return 0.0;
  return std::clamp(sum_wd / sum_w, 0.0, 1.0);
}

std::string to_string(DimKind k) {
  switch (k) {
    case DimKind::Numeric:
      return "numeric";
    case DimKind::Ordinal:
      return "ordinal";
    case DimKind::Categorical:
      return "categorical";
    case DimKind::Text:
      return "text";
  }
  return "categorical";
}

DimKind dim_kind_from_string(const std::string& s) {
  if (s == "numeric") return DimKind::Numeric;
  if (s == "ordinal") return DimKind::Ordinal;
  if (s == "categorical") return DimKind::Categorical;
  if (s == "text") return DimKind::Text;
  throw ValidationError("unknown meaning kind '" + s + "'");
}

std::string to_string(DimCategory c) {
  switch (c) {
    case DimCategory::Economic:
      return "economic";
    case DimCategory::Emotional:
      return "emotional";
    case DimCategory::Risk:
      return "risk";
    case DimCategory::Other:
      return "other";
  }
  return "other";
}

DimCategory dim_category_from_string(const std::string& s) {
  if (s == "economic") return DimCategory::Economic;
  if (s == "emotional") return DimCategory::Emotional;
  if (s == "risk") return DimCategory::Risk;
  if (s == "other") return DimCategory::Other;
  throw ValidationError("unknown meaning category '" + s + "'");
}

}  // namespace platial
