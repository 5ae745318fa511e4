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

#ifndef PLATIAL_MEANING_HPP
#define PLATIAL_MEANING_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace platial {

enum class DimKind { Numeric, Ordinal, Categorical, Text };

enum class DimCategory { Economic, Emotional, Risk, Other };

/// One weighted semantic dimension. Numeric dimensions carry a closed value
/// range used for normalization; ordinal dimensions carry their level list
/// from lowest to highest.
struct MeaningDim {
  DimKind kind = DimKind::Categorical;
  std::variant<double, std::string> value;
  double weight = 1.0;
  double range_lo = 0.0;  // numeric only
  double range_hi = 1.0;  // numeric only
  std::vector<std::string> levels;  // ordinal only
  std::optional<DimCategory> category;

  static MeaningDim numeric(double value, double lo, double hi,
                            double weight = 1.0);
  static MeaningDim ordinal(std::string value, std::vector<std::string> levels,
                            double weight = 1.0);
  static MeaningDim categorical(std::string value, double weight = 1.0);
  static MeaningDim text(std::string value, double weight = 1.0);

  bool operator==(const MeaningDim&) const = default;
};

/// Keyed set of semantic dimensions attached to a place state.
using Meaning = std::map<std::string, MeaningDim>;

void validate(const std::string& key, const MeaningDim& dim);
void validate(const Meaning& m);

/// Weighted mean of per-dimension distances over the union of keys, in
/// [0,1]. Dimensions present on one side only count as fully different.
/// Same-key dimensions must agree on kind and scale (numeric range, ordinal
/// levels); a conflict is a schema error, not a distance.
double semantic_distance(const Meaning& a, const Meaning& b);

std::string to_string(DimKind k);
DimKind dim_kind_from_string(const std::string& s);
std::string to_string(DimCategory c);
DimCategory dim_category_from_string(const std::string& s);

}  // namespace platial

#endif  // PLATIAL_MEANING_HPP
