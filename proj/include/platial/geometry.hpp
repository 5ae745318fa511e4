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

#ifndef PLATIAL_GEOMETRY_HPP
#define PLATIAL_GEOMETRY_HPP

#include <string>
#include <vector>

namespace platial {

/// Coordinate reference: local planar meters, or WGS84 degrees (points only).
enum class Crs { PlanarM, Wgs84Deg };

struct Coord {
  double x = 0.0;  // easting (planar-m) or longitude (wgs84-deg)
  double y = 0.0;  // northing (planar-m) or latitude (wgs84-deg)

  bool operator==(const Coord&) const = default;
};

/// Crisp spatial extent: a point, a simple polygon (outer ring only, closed,
/// counter-clockwise), or a flat collection of point/polygon parts.
struct Geometry {
  enum class Kind { Point, Polygon, Multi };

  Kind kind = Kind::Point;
  Crs crs = Crs::PlanarM;
  Coord point;                  // Kind::Point
  std::vector<Coord> ring;      // Kind::Polygon; first vertex repeated last
  std::vector<Geometry> parts;  // Kind::Multi; >= 1 point/polygon parts

  static Geometry make_point(Coord c, Crs crs = Crs::PlanarM);
  /// Normalizes the ring to counter-clockwise and drops repeated consecutive
  /// vertices before validating.
  static Geometry make_polygon(std::vector<Coord> ring, Crs crs = Crs::PlanarM);
  static Geometry make_multi(std::vector<Geometry> parts);

  bool operator==(const Geometry&) const = default;
};

void validate(const Geometry& g);

double area(const Geometry& g);

Geometry translate(const Geometry& g, double dx, double dy);

struct CentroidResult {
  Coord point;
  bool degenerate = false;  // zero-area fallback (vertex mean) was used
};

/// Point: the point itself. Polygon: area-weighted ring centroid, falling
/// back to the vertex mean for zero-area rings. Multi: area-weighted over
/// parts; a pure point collection uses the arithmetic mean.
CentroidResult centroid(const Geometry& g);

/// Distance in meters: straight-line for planar-m, great-circle for
/// wgs84-deg.
double coord_distance(const Coord& a, const Coord& b, Crs crs);
double centroid_distance(const Geometry& a, const Geometry& b);

/// area(symmetric difference) / area(union) in [0,1]. With align_centroids
/// the second geometry is translated onto the first's centroid, so only
/// shape change counts; without it displacement counts too. Zero-measure
/// extents compare by coordinate set. Polygon overlay requires planar-m.
double geometry_change(const Geometry& a, const Geometry& b,
                       bool align_centroids);

double intersection_area(const Geometry& a, const Geometry& b);
double union_area(const Geometry& a, const Geometry& b);

/// True when p lies inside or on the boundary of g.
bool contains_point(const Geometry& g, const Coord& p);

/// Dissolved union of several extents. A single input comes back unchanged;
/// point parts pass through.
Geometry dissolve_union(const std::vector<Geometry>& extents);

std::string to_string(Crs crs);
Crs crs_from_string(const std::string& s);
std::string to_string(Geometry::Kind k);
Geometry::Kind geometry_kind_from_string(const std::string& s);

}  // namespace platial

#endif  // PLATIAL_GEOMETRY_HPP
