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

#ifndef PLATIAL_HIERARCHY_HPP
#define PLATIAL_HIERARCHY_HPP

#include <map>
#include <string>
#include <vector>

#include "platial/place.hpp"

namespace platial {

/// Parent/child graph over place states, one state per id. Built from the
/// parent references; duplicate ids, dangling parents, and cycles are
/// construction errors. Level inversions (child level not finer than the
/// parent's) are kept but reported as warnings.
struct PlaceHierarchy {
  std::map<std::string, Place> nodes;
  std::map<std::string, std::vector<std::string>> children;  // sorted ids
  std::vector<std::string> roots;                            // sorted ids
  std::vector<std::string> warnings;
};

PlaceHierarchy build_hierarchy(const std::vector<Place>& places);

/// Extent of a node: its own geometry when present, else the dissolved
/// union of its children's derived extents. No geometry anywhere below is
/// an error.
Geometry derive_extent(const PlaceHierarchy& h, const std::string& id);

struct EdgeConsistency {
  std::string parent;
  std::string child;
  double contained_fraction = 0.0;  // share of the child inside the parent
  bool consistent = false;
};

struct ConsistencyReport {
  std::vector<EdgeConsistency> edges;  // parent, then child id order
  std::size_t n_checked = 0;
  std::size_t n_skipped = 0;  // edges missing a derivable extent
  bool all_consistent = true;
};

/// Checks every parent/child edge: at least `threshold` of the child's
/// extent (area, or points for zero-area extents) must fall inside the
/// parent's derived extent.
ConsistencyReport spatial_consistency(const PlaceHierarchy& h,
                                      double threshold = 0.9);

/// The places at one level, in id order.
std::vector<Place> places_at_level(const PlaceHierarchy& h, int level);

}  // namespace platial

#endif  // PLATIAL_HIERARCHY_HPP
