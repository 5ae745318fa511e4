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

#include "platial/hierarchy.hpp"

#include <algorithm>
#include <cmath>

#include "platial/error.hpp"

namespace platial {

namespace {

// Coordinates standing in for a zero-area extent: the point, or the ring
// vertices without the closing repeat.
void collect_coords(const Geometry& g, std::vector<Coord>& out) {
  switch (g.kind) {
    case Geometry::Kind::Point:
      out.push_back(g.point);
      break;
    case Geometry::Kind::Polygon:
      for (std::size_t i = 0; i + 1 < g.ring.size(); ++i)
        out.push_back(g.ring[i]);
      break;
    case Geometry::Kind::Multi:
      for (const Geometry& p : g.parts) collect_coords(p, out);
      break;
  }
}

}  // namespace

PlaceHierarchy build_hierarchy(const std::vector<Place>& places) {
  PlaceHierarchy h;
  for (const Place& p : places) {
    validate(p);
    if (!h.nodes.emplace(p.id, p).second) {
      throw ValidationError("duplicate place id '" + p.id + "'");
    }
  }
  for (const auto& [id, p] : h.nodes) {
    if (!p.parent.has_value()) {
      h.roots.push_back(id);
      continue;
    }
    const auto parent = h.nodes.find(*p.parent);
    if (parent == h.nodes.end()) {
      throw ValidationError("place '" + id + "' references missing parent '" +
                            *p.parent + "'");
    }
    h.children[*p.parent].push_back(id);
    if (p.level <= parent->second.level) {
      h.warnings.push_back("place '" + id + "' at level " +
                           std::to_string(p.level) +
                           " is not finer than its parent '" + *p.parent +
                           "' at level " +
                           std::to_string(parent->second.level));
    }
  }
  // Map iteration already gave sorted roots; children lists arrive sorted
  // for the same reason, but keep the guarantee explicit.
  for (auto& [id, kids] : h.children) std::sort(kids.begin(), kids.end());

  // Walk each parent chain; revisiting a node already on the chain is a
  // cycle. 0 = untouched, 1 = on the current chain, 2 = known acyclic.
  std::map<std::string, int> color;
  for (const auto& [start, node] : h.nodes) {
    if (color[start] == 2) continue;
    std::vector<std::string> chain;
    const Place* cur = &node;
    std::string cur_id = start;
    while (true) {
      if (color[cur_id] == 1) {
        std::string msg = "parent cycle: ";
        bool in_cycle = false;
        for (const std::string& link : chain) {
          if (link == cur_id) in_cycle = true;
          if (in_cycle) msg += link + " -> ";
        }
        throw ValidationError(msg + cur_id);
      }
      if (color[cur_id] == 2) break;
      color[cur_id] = 1;
      chain.push_back(cur_id);
      if (!cur->parent.has_value()) break;
      cur_id = *cur->parent;
      cur = &h.nodes.at(cur_id);
    }
    for (const std::string& link : chain) color[link] = 2;
  }
  return h;
}

Geometry derive_extent(const PlaceHierarchy& h, const std::string& id) {
  const auto it = h.nodes.find(id);
  if (it == h.nodes.end()) {
    throw ValidationError("unknown place id '" + id + "'");
  }
  if (it->second.geometry.has_value()) return *it->second.geometry;
  const auto kids = h.children.find(id);
  if (kids == h.children.end() || kids->second.empty()) {
    throw ValidationError("place '" + id +
                          "' has no geometry and no children to derive one");
  }
  std::vector<Geometry> extents;
  extents.reserve(kids->second.size());
  for (const std::string& child : kids->second) {
    extents.push_back(derive_extent(h, child));
  }
  return dissolve_union(extents);
}

ConsistencyReport spatial_consistency(const PlaceHierarchy& h,
                                      double threshold) {
  if (!std::isfinite(threshold) || threshold <= 0.0 || threshold > 1.0) {
    throw ValidationError("containment threshold must lie in (0,1]");
  }
  ConsistencyReport report;
  for (const auto& [parent_id, kids] : h.children) {
    for (const std::string& child_id : kids) {
      Geometry parent_ext, child_ext;
      try {
        parent_ext = derive_extent(h, parent_id);
        child_ext = derive_extent(h, child_id);
      } catch (const ValidationError&) {
        ++report.n_skipped;
        continue;
      }
      const double child_area = area(child_ext);
      double fraction = 0.0;
      if (child_area > 0.0) {
        fraction = intersection_area(parent_ext, child_ext) / child_area;
      } else {
        std::vector<Coord> coords;
        collect_coords(child_ext, coords);
        std::size_t inside = 0;
        for (const Coord& c : coords) {
          if (contains_point(parent_ext, c)) ++inside;
        }
        fraction = static_cast<double>(inside) /
                   static_cast<double>(coords.size());
      }
      EdgeConsistency edge;
      edge.parent = parent_id;
      edge.child = child_id;
      edge.contained_fraction = std::min(1.0, fraction);
      // A hair of slack absorbs overlay rounding on exact containment.
      edge.consistent = fraction + 1e-9 >= threshold;
      report.all_consistent = report.all_consistent && edge.consistent;
      report.edges.push_back(std::move(edge));
      ++report.n_checked;
    }
  }
  return report;
}

std::vector<Place> places_at_level(const PlaceHierarchy& h, int level) {
  std::vector<Place> out;
  for (const auto& [id, p] : h.nodes) {
    if (p.level == level) out.push_back(p);
  }
  return out;
}

}  // namespace platial
