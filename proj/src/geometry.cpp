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

#include "platial/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "platial/error.hpp"

namespace platial {

namespace bg = boost::geometry;

namespace {

using BoostPoint = bg::model::d2::point_xy<double>;
// Counter-clockwise, closed: matches the ring convention of Geometry.
using BoostPolygon = bg::model::polygon<BoostPoint, false, true>;
using BoostMultiPolygon = bg::model::multi_polygon<BoostPolygon>;

constexpr double kCoordEps = 1e-9;
// A ring counts as degenerate when its area vanishes relative to its extent.
constexpr double kDegenerateAreaRel = 1e-14;

bool finite(const Coord& c) {
  return std::isfinite(c.x) && std::isfinite(c.y);
}

bool near(const Coord& a, const Coord& b) {
  return std::abs(a.x - b.x) <= kCoordEps && std::abs(a.y - b.y) <= kCoordEps;
}

// Twice the signed ring area, computed in a local frame anchored at the
// first vertex so translated rings give bit-identical results.
double signed_area2(const std::vector<Coord>& ring) {
  if (ring.size() < 3) return 0.0;
  const Coord o = ring.front();
  double a2 = 0.0;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    const double xi = ring[i].x - o.x, yi = ring[i].y - o.y;
    const double xj = ring[i + 1].x - o.x, yj = ring[i + 1].y - o.y;
    a2 += xi * yj - xj * yi;
  }
  return a2;
}

double bbox_diag2(const std::vector<Coord>& ring) {
  double lox = ring.front().x, hix = lox, loy = ring.front().y, hiy = loy;
  for (const Coord& c : ring) {
    lox = std::min(lox, c.x);
    hix = std::max(hix, c.x);
    loy = std::min(loy, c.y);
    hiy = std::max(hiy, c.y);
  }
  const double dx = hix - lox, dy = hiy - loy;
  return dx * dx + dy * dy;
}

bool ring_degenerate(const std::vector<Coord>& ring) {
  const double diag2 = bbox_diag2(ring);
  if (diag2 == 0.0) return true;
  return std::abs(signed_area2(ring)) <= kDegenerateAreaRel * diag2;
}

BoostPolygon to_boost(const Geometry& g) {
  BoostPolygon poly;
  for (const Coord& c : g.ring) bg::append(poly.outer(), BoostPoint{c.x, c.y});
  return poly;
}

Geometry from_boost(const BoostPolygon& poly, Crs crs) {
  if (!poly.inners().empty()) {
    throw ValidationError("polygon union produced holes; not supported");
  }
  std::vector<Coord> ring;
  ring.reserve(poly.outer().size());
  for (const BoostPoint& p : poly.outer()) ring.push_back({p.x(), p.y()});
  return Geometry::make_polygon(std::move(ring), crs);
}

bool has_polygon(const Geometry& g) {
  if (g.kind == Geometry::Kind::Polygon) return true;
  if (g.kind == Geometry::Kind::Multi) {
    for (const Geometry& p : g.parts) {
      if (p.kind == Geometry::Kind::Polygon) return true;
    }
  }
  return false;
}

// All polygon parts with positive area, dissolved into one valid
// multi-polygon. Points and degenerate rings carry no measure.
BoostMultiPolygon dissolve_polygons(const Geometry& g) {
  BoostMultiPolygon out;
  auto add = [&out](const Geometry& poly) {
    if (ring_degenerate(poly.ring)) return;
    BoostMultiPolygon merged;
    bg::union_(out, to_boost(poly), merged);
    out = std::move(merged);
  };
  if (g.kind == Geometry::Kind::Polygon) {
    add(g);
  } else if (g.kind == Geometry::Kind::Multi) {
    for (const Geometry& p : g.parts) {
      if (p.kind == Geometry::Kind::Polygon) add(p);
    }
  }
  return out;
}

// Representative coordinates of a zero-measure extent: the point itself, or
// the ring vertices without the closing repeat.
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

bool same_coord_set(const Geometry& a, const Geometry& b) {
  std::vector<Coord> ca, cb;
  collect_coords(a, ca);
  collect_coords(b, cb);
  auto lt = [](const Coord& l, const Coord& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  };
  std::sort(ca.begin(), ca.end(), lt);
  std::sort(cb.begin(), cb.end(), lt);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!near(ca[i], cb[i])) return false;
  }
  return true;
}

double point_segment_dist(const Coord& p, const Coord& a, const Coord& b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
  return std::hypot(dx, dy);
}

void require_same_crs(const Geometry& a, const Geometry& b) {
  if (a.crs != b.crs) {
    throw ValidationError("geometries mix " + to_string(a.crs) + " and " +
                          to_string(b.crs));
  }
}

void require_planar_for_overlay(const Geometry& a, const Geometry& b) {
  if ((has_polygon(a) || has_polygon(b)) && a.crs != Crs::PlanarM) {
    throw ValidationError(
        "polygon overlay needs planar-m coordinates; project first");
  }
}

}  // namespace

Geometry Geometry::make_point(Coord c, Crs crs) {
  Geometry g;
  g.kind = Kind::Point;
  g.crs = crs;
  g.point = c;
  validate(g);
  return g;
}

Geometry Geometry::make_polygon(std::vector<Coord> ring, Crs crs) {
  // Drop repeated consecutive vertices, including a pre-existing closure.
  std::vector<Coord> clean;
  for (const Coord& c : ring) {
    if (clean.empty() || !(clean.back() == c)) clean.push_back(c);
  }
  if (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  if (clean.size() < 3) {
    throw ValidationError("polygon needs at least 3 distinct vertices");
  }
  if (signed_area2(clean) < 0.0) {
    std::reverse(clean.begin(), clean.end());
  }
  clean.push_back(clean.front());

  Geometry g;
  g.kind = Kind::Polygon;
  g.crs = crs;
  g.ring = std::move(clean);
  validate(g);
  return g;
}

Geometry Geometry::make_multi(std::vector<Geometry> parts) {
  Geometry g;
  g.kind = Kind::Multi;
  g.crs = parts.empty() ? Crs::PlanarM : parts.front().crs;
  g.parts = std::move(parts);
  validate(g);
  return g;
}

void validate(const Geometry& g) {
  switch (g.kind) {
    case Geometry::Kind::Point: {
      if (!finite(g.point)) throw ValidationError("point coordinate not finite");
      if (g.crs == Crs::Wgs84Deg &&
          (std::abs(g.point.x) > 180.0 || std::abs(g.point.y) > 90.0)) {
        throw ValidationError("wgs84-deg point outside lon/lat bounds");
      }
      return;
    }
    case Geometry::Kind::Polygon: {
      if (g.crs != Crs::PlanarM) {
        throw ValidationError(
            "polygons need planar-m coordinates; project first");
      }
      if (g.ring.size() < 4) {
        throw ValidationError("polygon ring too short; needs a closed ring "
                              "with at least 3 distinct vertices");
      }
      if (!(g.ring.front() == g.ring.back())) {
        throw ValidationError("polygon ring is not closed");
      }
      for (const Coord& c : g.ring) {
        if (!finite(c)) throw ValidationError("ring coordinate not finite");
      }
      if (signed_area2(g.ring) < 0.0) {
        throw ValidationError("polygon ring is clockwise; expected "
                              "counter-clockwise");
      }
      // Zero-area rings stay accepted as degenerate extents; only rings with
      // real area must be simple.
      if (!ring_degenerate(g.ring)) {
        const BoostPolygon poly = to_boost(g);
        std::string reason;
        if (!bg::is_valid(poly, reason)) {
          throw ValidationError("polygon ring invalid: " + reason);
        }
      }
      return;
    }
    case Geometry::Kind::Multi: {
      if (g.parts.empty()) {
        throw ValidationError("multi geometry needs at least one part");
      }
      for (const Geometry& p : g.parts) {
        if (p.kind == Geometry::Kind::Multi) {
          throw ValidationError("multi geometry cannot nest multi parts");
        }
        if (p.crs != g.crs) {
          throw ValidationError("multi geometry parts mix reference systems");
        }
        validate(p);
      }
      return;
    }
  }
  throw ValidationError("unknown geometry kind");
}

double area(const Geometry& g) {
  switch (g.kind) {
    case Geometry::Kind::Point:
      return 0.0;
    case Geometry::Kind::Polygon:
      return std::abs(signed_area2(g.ring)) / 2.0;
    case Geometry::Kind::Multi: {
      double sum = 0.0;
      for (const Geometry& p : g.parts) sum += area(p);
      return sum;
    }
  }
  return 0.0;
}

Geometry translate(const Geometry& g, double dx, double dy) {
  Geometry out = g;
  switch (out.kind) {
    case Geometry::Kind::Point:
      out.point.x += dx;
      out.point.y += dy;
      break;
    case Geometry::Kind::Polygon:
      for (Coord& c : out.ring) {
        c.x += dx;
        c.y += dy;
      }
      break;
    case Geometry::Kind::Multi:
      for (Geometry& p : out.parts) p = translate(p, dx, dy);
      break;
  }
  return out;
}

CentroidResult centroid(const Geometry& g) {
  switch (g.kind) {
    case Geometry::Kind::Point:
      return {g.point, false};
    case Geometry::Kind::Polygon: {
      const std::vector<Coord>& ring = g.ring;
      if (!ring_degenerate(ring)) {
        const Coord o = ring.front();
        const double a2 = signed_area2(ring);
        double cx = 0.0, cy = 0.0;
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
          const double xi = ring[i].x - o.x, yi = ring[i].y - o.y;
          const double xj = ring[i + 1].x - o.x, yj = ring[i + 1].y - o.y;
          const double cross = xi * yj - xj * yi;
          cx += (xi + xj) * cross;
          cy += (yi + yj) * cross;
        }
        return {{o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2)}, false};
      }
      // Flat ring: fall back to the vertex mean.
      double sx = 0.0, sy = 0.0;
      const std::size_t n = ring.size() - 1;
      for (std::size_t i = 0; i < n; ++i) {
        sx += ring[i].x;
        sy += ring[i].y;
      }
      return {{sx / n, sy / n}, true};
    }
    case Geometry::Kind::Multi: {
      double total = 0.0;
      for (const Geometry& p : g.parts) total += area(p);
      if (total > 0.0) {
        double cx = 0.0, cy = 0.0;
        for (const Geometry& p : g.parts) {
          const double w = area(p);
          if (w <= 0.0) continue;
          const CentroidResult c = centroid(p);
          cx += w * c.point.x;
          cy += w * c.point.y;
        }
        return {{cx / total, cy / total}, false};
      }
      double sx = 0.0, sy = 0.0;
      bool degenerate = false;
      for (const Geometry& p : g.parts) {
        const CentroidResult c = centroid(p);
        sx += c.point.x;
        sy += c.point.y;
        degenerate = degenerate || c.degenerate;
      }
      const double n = static_cast<double>(g.parts.size());
      return {{sx / n, sy / n}, degenerate};
    }
  }
  return {{0.0, 0.0}, true};
}

double coord_distance(const Coord& a, const Coord& b, Crs crs) {
  if (crs == Crs::PlanarM) return std::hypot(a.x - b.x, a.y - b.y);
  // Haversine great-circle distance on a spherical earth.
  constexpr double kEarthRadiusM = 6'371'000.0;
  constexpr double kDegToRad = std::numbers::pi / 180.0;
  const double lat1 = a.y * kDegToRad, lat2 = b.y * kDegToRad;
  const double dlat = (b.y - a.y) * kDegToRad;
  const double dlon = (b.x - a.x) * kDegToRad;
  const double s1 = std::sin(dlat / 2.0), s2 = std::sin(dlon / 2.0);
  const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

double centroid_distance(const Geometry& a, const Geometry& b) {
  require_same_crs(a, b);
  return coord_distance(centroid(a).point, centroid(b).point, a.crs);
}

double geometry_change(const Geometry& a, const Geometry& b,
                       bool align_centroids) {
  validate(a);
  validate(b);
  require_same_crs(a, b);
  require_planar_for_overlay(a, b);

  Geometry moved = b;
  if (align_centroids) {
    const Coord ca = centroid(a).point;
    const Coord cb = centroid(b).point;
    moved = translate(b, ca.x - cb.x, ca.y - cb.y);
  }

  const BoostMultiPolygon ma = dissolve_polygons(a);
  const BoostMultiPolygon mb = dissolve_polygons(moved);
  BoostMultiPolygon uni;
  bg::union_(ma, mb, uni);
  const double union_a = bg::area(uni);
  if (union_a > 0.0) {
    BoostMultiPolygon sym;
    bg::sym_difference(ma, mb, sym);
    return std::clamp(bg::area(sym) / union_a, 0.0, 1.0);
  }
  // Both extents are zero-measure: identical coordinate sets mean no
  // change, anything else counts as full change.
  return same_coord_set(a, moved) ? 0.0 : 1.0;
}

double intersection_area(const Geometry& a, const Geometry& b) {
  validate(a);
  validate(b);
  require_same_crs(a, b);
  require_planar_for_overlay(a, b);
  BoostMultiPolygon out;
  bg::intersection(dissolve_polygons(a), dissolve_polygons(b), out);
  return bg::area(out);
}

double union_area(const Geometry& a, const Geometry& b) {
  validate(a);
  validate(b);
  require_same_crs(a, b);
  require_planar_for_overlay(a, b);
  BoostMultiPolygon out;
  bg::union_(dissolve_polygons(a), dissolve_polygons(b), out);
  return bg::area(out);
}

bool contains_point(const Geometry& g, const Coord& p) {
  switch (g.kind) {
    case Geometry::Kind::Point:
      return near(g.point, p);
    case Geometry::Kind::Polygon: {
      if (ring_degenerate(g.ring)) {
        for (std::size_t i = 0; i + 1 < g.ring.size(); ++i) {
          if (point_segment_dist(p, g.ring[i], g.ring[i + 1]) <= kCoordEps)
            return true;
        }
        return false;
      }
      return bg::covered_by(BoostPoint{p.x, p.y}, to_boost(g));
    }
    case Geometry::Kind::Multi:
      for (const Geometry& part : g.parts) {
        if (contains_point(part, p)) return true;
      }
      return false;
  }
  return false;
}

Geometry dissolve_union(const std::vector<Geometry>& extents) {
  if (extents.empty()) {
    throw ValidationError("dissolve needs at least one extent");
  }
  for (const Geometry& g : extents) validate(g);
  for (const Geometry& g : extents) require_same_crs(extents.front(), g);
  if (extents.size() == 1) return extents.front();
  const Crs crs = extents.front().crs;

  BoostMultiPolygon merged;
  std::vector<Geometry> flat_parts;  // degenerate polygons and points
  auto take = [&](const Geometry& part) {
    if (part.kind == Geometry::Kind::Polygon && !ring_degenerate(part.ring)) {
      BoostMultiPolygon next;
      bg::union_(merged, to_boost(part), next);
      merged = std::move(next);
    } else {
      flat_parts.push_back(part);
    }
  };
  for (const Geometry& g : extents) {
    if (g.kind == Geometry::Kind::Multi) {
      for (const Geometry& p : g.parts) take(p);
    } else {
      take(g);
    }
  }

  std::vector<Geometry> parts;
  for (const BoostPolygon& poly : merged) parts.push_back(from_boost(poly, crs));
  // Exact-duplicate zero-measure parts collapse to one.
  for (const Geometry& p : flat_parts) {
    if (std::find(parts.begin(), parts.end(), p) == parts.end())
      parts.push_back(p);
  }
  if (parts.size() == 1) return parts.front();
  return Geometry::make_multi(std::move(parts));
}

std::string to_string(Crs crs) {
  return crs == Crs::PlanarM ? "planar-m" : "wgs84-deg";
}

Crs crs_from_string(const std::string& s) {
  if (s == "planar-m") return Crs::PlanarM;
  if (s == "wgs84-deg") return Crs::Wgs84Deg;
  throw ValidationError("unknown crs '" + s + "'");
}

std::string to_string(Geometry::Kind k) {
  switch (k) {
    case Geometry::Kind::Point:
      return "point";
    case Geometry::Kind::Polygon:
      return "polygon";
    case Geometry::Kind::Multi:
      return "multi";
  }
  return "point";
}

Geometry::Kind geometry_kind_from_string(const std::string& s) {
  if (s == "point") return Geometry::Kind::Point;
  if (s == "polygon") return Geometry::Kind::Polygon;
  if (s == "multi") return Geometry::Kind::Multi;
  throw ValidationError("unknown geometry kind '" + s + "'");
}

}  // namespace platial
