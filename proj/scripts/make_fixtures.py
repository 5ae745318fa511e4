#!/usr/bin/env python3
# Copyright 2026 The platial Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the committed fixture files under fixtures/.

Everything here is hand-specified and deterministic; rerunning the script
reproduces the files byte for byte.
"""

import json
import os
from datetime import date, timedelta

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def ts(day, clock="00:00:00"):
    return f"{day}T{clock}Z"


def instant(day, clock="00:00:00"):
    return {"kind": "instant", "start": ts(day, clock)}


def interval(start_day, end_day=None):
    t = {"kind": "interval", "start": ts(start_day)}
    if end_day is not None:
        t["end"] = ts(end_day)
    return t


def square(cx, cy, side):
    h = side / 2.0
    return {
        "type": "polygon",
        "ring": [
            [cx - h, cy - h],
            [cx + h, cy - h],
            [cx + h, cy + h],
            [cx - h, cy + h],
            [cx - h, cy - h],
        ],
    }


def rect(x0, y0, x1, y1):
    return {
        "type": "polygon",
        "ring": [[x0, y0], [x1, y0], [x1, y1], [x0, y1], [x0, y0]],
    }


def point(x, y):
    return {"type": "point", "xy": [x, y]}


def cat(key, value, weight=None, category=None):
    d = {"key": key, "kind": "categorical", "value": value}
    if weight is not None:
        d["weight"] = weight
    if category is not None:
        d["category"] = category
    return d


def num(key, value, lo, hi, weight=None, category=None):
    d = {"key": key, "kind": "numeric", "value": value, "range": [lo, hi]}
    if weight is not None:
        d["weight"] = weight
    if category is not None:
        d["category"] = category
    return d


def ordn(key, value, levels, weight=None):
    d = {"key": key, "kind": "ordinal", "value": value, "levels": levels}
    if weight is not None:
        d["weight"] = weight
    return d


def write(name, payload):
    path = os.path.join(OUT_DIR, name)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2)
        f.write("\n")
    print(f"wrote {path}")


def table1_canon():
    timelines = []

    # Crowd gathering: the extent swells over a single afternoon.
    timelines.append({
        "place_id": "demonstration",
        "description": "crowd event whose extent grows hour by hour",
        "states": [
            {"time": instant("2019-09-20", "14:00:00"),
             "geometry": square(0, 0, 10),
             "meaning": [cat("use", "assembly")],
             "lifecycle": {"instantiation": "instantaneous"}},
            {"time": instant("2019-09-20", "15:00:00"),
             "geometry": square(0, 0, 20),
             "meaning": [cat("use", "assembly")],
             "lifecycle": {"instantiation": "instantaneous"}},
            {"time": instant("2019-09-20", "16:00:00"),
             "geometry": square(0, 0, 30),
             "meaning": [cat("use", "assembly")],
             "lifecycle": {"instantiation": "instantaneous"}},
        ],
    })

    # Border checkpoint set up with a known end date, later torn down.
    timelines.append({
        "place_id": "check-post",
        "description": "checkpoint installed for a fixed term and removed",
        "states": [
            {"time": interval("2015-01-01", "2015-06-30"),
             "geometry": square(5000, 0, 8),
             "meaning": [cat("use", "control")],
             "lifecycle": {"planned_end": ts("2016-12-31"),
                           "dissolved_at": ts("2016-11-15")}},
            {"time": interval("2015-07-01", "2016-11-15"),
             "geometry": square(5000, 0, 8),
             "meaning": [cat("use", "control")],
             "lifecycle": {"planned_end": ts("2016-12-31"),
                           "dissolved_at": ts("2016-11-15")}},
        ],
    })

    # Landmark standing since 1889 with an unchanged footprint.
    timelines.append({
        "place_id": "eiffel-tower",
        "description": "landmark with a stable footprint and no end in sight",
        "states": [
            {"time": interval("1889-03-31", "1950-01-01"),
             "geometry": square(10000, 0, 125),
             "meaning": [cat("use", "landmark")]},
            {"time": interval("1950-01-01", None),
             "geometry": square(10000, 0, 125),
             "meaning": [cat("use", "landmark")]},
        ],
    })

    # Towers built to last, destroyed without an announced end.
    timelines.append({
        "place_id": "wtc",
        "description": "built open-ended, gone after the attack",
        "states": [
            {"time": interval("1973-04-04", "2001-09-11"),
             "geometry": square(20000, 0, 63),
             "meaning": [cat("use", "offices")],
             "lifecycle": {"dissolved_at": ts("2001-09-11")}},
        ],
    })

    # Sanctuary whose identity is inseparable from its spot.
    timelines.append({
        "place_id": "kaaba",
        "description": "sanctuary whose identity is tied to the spot itself",
        "states": [
            {"time": interval("0622-01-01", None),
             "geometry": square(30000, 0, 12),
             "meaning": [cat("use", "sanctuary", None, "emotional")],
             "lifecycle": {"essence_bound_to_location": True}},
        ],
    })

    # Shop that moved two kilometers and stayed the same shop.
    timelines.append({
        "place_id": "shop-move",
        "description": "shop relocated across town, same business throughout",
        "states": [
            {"time": interval("2018-01-01", "2020-03-31"),
             "geometry": square(40000, 0, 15),
             "meaning": [cat("use", "bakery"), cat("owner", "fam-hartl")]},
            {"time": interval("2020-04-01", None),
             "geometry": square(42000, 0, 15),
             "meaning": [cat("use", "bakery"), cat("owner", "fam-hartl")]},
        ],
    })

    # Crash site: a place that came into being in one moment.
    timelines.append({
        "place_id": "accident",
        "description": "crash site that existed from one moment on",
        "states": [
            {"time": instant("2021-02-03", "08:41:00"),
             "geometry": square(50000, 0, 6),
             "meaning": [cat("use", "incident")],
             "lifecycle": {"instantiation": "instantaneous"}},
        ],
    })

    write("table1-canon.json", {
        "format_version": "1",
        "crs": "planar-m",
        "timelines": timelines,
    })


def table3_canon():
    timelines = [
        {
            "place_id": "monument",
            "description": "one documented footprint over one documented span",
            "states": [
                {"time": interval("1900-01-01", None),
                 "geometry": square(0, 0, 9),
                 "meaning": [cat("use", "memorial")]},
            ],
        },
        {
            "place_id": "shop-annex",
            "description": "footprint redrawn within a single documented span",
            "states": [
                {"time": interval("2010-01-01", "2020-12-31"),
                 "geometry": rect(1000, 0, 1020, 20),
                 "meaning": [cat("use", "store")]},
                {"time": interval("2010-01-01", "2020-12-31"),
                 "geometry": {"type": "polygon",
                              "ring": [[1000, 0], [1020, 0], [1020, 20],
                                       [1030, 20], [1030, 30], [1000, 30],
                                       [1000, 0]]},
                 "meaning": [cat("use", "store")]},
            ],
        },
        {
            "place_id": "civic-hall",
            "description": "same footprint documented over two separate spans",
            "states": [
                {"time": interval("1980-01-01", "1999-12-31"),
                 "geometry": square(2000, 0, 30),
                 "meaning": [cat("use", "assembly-hall")]},
                {"time": interval("2000-01-01", None),
                 "geometry": square(2000, 0, 30),
                 "meaning": [cat("use", "assembly-hall")]},
            ],
        },
        {
            "place_id": "relocated-mosque",
            "description": "same building carried to a new site in a later span",
            "states": [
                {"time": interval("1970-01-01", "2009-12-31"),
                 "geometry": square(3000, 0, 25),
                 "meaning": [cat("use", "mosque")]},
                {"time": interval("2010-01-01", None),
                 "geometry": square(6000, 0, 25),
                 "meaning": [cat("use", "mosque")]},
            ],
        },
    ]
    write("table3-canon.json", {
        "format_version": "1",
        "crs": "planar-m",
        "timelines": timelines,
    })


VILLAGES = ["ainabad", "shishkat", "gulmit", "ghulkin", "hussaini"]


def household_center(h):
    """Center of household h (1-based, 1..240); 48 homes per village."""
    v = (h - 1) // 48
    k = (h - 1) % 48
    gx, gy = k % 8, k // 8
    x0 = v * 2000.0
    return (x0 + 70.0 + gx * 110.0, 70.0 + gy * 140.0)


def attabad_records():
    records = [{
        "id": "atb-region",
        "level": 0,
        "time": instant("2010-01-04"),
        "meaning": [cat("use", "valley-region")],
    }]
    for v, name in enumerate(VILLAGES):
        records.append({
            "id": f"atb-v-{name}",
            "level": 1,
            "parent": "atb-region",
            "time": instant("2010-01-04"),
            "geometry": rect(v * 2000.0, 0.0, v * 2000.0 + 1000.0, 1000.0),
            "meaning": [cat("use", "settlement")],
        })
    for h in range(1, 241):
        cx, cy = household_center(h)
        records.append({
            "id": f"atb-h-{h:03d}",
            "level": 2,
            "parent": f"atb-v-{VILLAGES[(h - 1) // 48]}",
            "time": instant("2010-01-04"),
            "geometry": square(cx, cy, 20),
            "meaning": [cat("use", "dwelling")],
        })
    write("attabad.json", {
        "format_version": "1",
        "crs": "planar-m",
        "metadata": {"submerged_households": 240, "villages": 5},
        "records": records,
    })


def attabad_timelines():
    # 380 displaced families over 240 submerged households: households
    # 1..140 host two families each, 141..240 one family each.
    timelines = []
    for fam in range(1, 381):
        if fam <= 280:
            h = (fam + 1) // 2
        else:
            h = 140 + (fam - 280)
        cx, cy = household_center(h)
        timelines.append({
            "place_id": f"atb-fam-{fam:03d}",
            "states": [
                {"level": 3,
                 "parent": f"atb-h-{h:03d}",
                 "time": instant("2010-01-04"),
                 "geometry": point(cx, cy),
                 "meaning": [cat("use", "home")]},
                {"level": 3,
                 "time": instant("2010-06-01"),
                 "geometry": point(cx + 3000.0, cy + 4000.0),
                 "meaning": [cat("use", "home")]},
            ],
        })
    write("attabad-timelines.json", {
        "format_version": "1",
        "crs": "planar-m",
        "metadata": {"displaced_families": 380},
        "timelines": timelines,
    })


def eferding_milestones():
    # 146 households offered resettlement after the 2013 flood; 72 had
    # signed and 57 had moved out by the end of 2019.
    disaster = "2013-06-02"
    zone = "2013-12-20"
    deadline = "2014-03-31"
    base = date(2014, 6, 1)

    tracks = []
    for i in range(1, 147):
        milestones = [
            {"kind": "disaster_occurrence", "at": ts(disaster)},
            {"kind": "zone_designation", "at": ts(zone)},
            {"kind": "agreement_deadline", "at": ts(deadline)},
        ]
        if i <= 72:
            signed = base + timedelta(days=(i - 1) * 28)
            milestones.append({"kind": "contract_signed", "at": ts(signed.isoformat())})
            if i <= 57:
                moved = signed + timedelta(days=180)
                milestones.append({"kind": "removal_complete", "at": ts(moved.isoformat())})
            elif i <= 65:
                moved = date(2020, 3, 1) + timedelta(days=(i - 58) * 28)
                milestones.append({"kind": "removal_complete", "at": ts(moved.isoformat())})
        elif i <= 80:
            signed = date(2020, 6, 1) + timedelta(days=(i - 73) * 28)
            milestones.append({"kind": "contract_signed", "at": ts(signed.isoformat())})
        tracks.append({
            "household_id": f"efd-{i:03d}",
            "mode": "relocation",
            "milestones": milestones,
        })

    write("eferding-milestones.json", {
        "format_version": "1",
        "metadata": {
            "zone_area_km2": 24.35,
            "buildings": 612,
            "housing_buildings": 138,
            "flood_years": [2002, 2013],
        },
        "tracks": tracks,
    })


def eferding_records():
    # Resettlement zone drawn as a rectangle of exactly 24.35 km^2.
    records = [{
        "id": "efd-zone",
        "level": 0,
        "time": instant("2013-12-20"),
        "geometry": rect(0.0, 0.0, 6087.5, 4000.0),
        "meaning": [cat("use", "resettlement-zone")],
    }]
    props = [
        (1, 0.9, 0.8, 0.6), (2, 0.6, 0.4, 0.3), (3, 0.3, 0.9, 0.2),
        (4, 0.8, 0.7, 0.5), (5, 0.2, 0.2, 0.9), (6, 0.5, 0.5, 1.0),
        (7, 1.0, 0.1, 0.4), (8, 0.7, 0.6, 0.7),
    ]
    for i, h, e, v in props:
        records.append({
            "id": f"efd-prop-{i:03d}",
            "level": 1,
            "parent": "efd-zone",
            "time": instant("2013-12-20"),
            "geometry": square(400.0 + i * 600.0, 2000.0, 20),
            "meaning": [
                num("hazard", h, 0, 1, None, "risk"),
                num("exposure", e, 0, 1, None, "risk"),
                num("vulnerability", v, 0, 1, None, "risk"),
                cat("use", "housing"),
            ],
        })
    write("eferding.json", {
        "format_version": "1",
        "crs": "planar-m",
        "records": records,
    })


def fig1_scales():
    noise_levels = ["quiet", "lively", "loud"]
    records = [
        {
            "id": "city",
            "level": 0,
            "time": instant("2022-05-01", "12:00:00"),
            "geometry": rect(0, 0, 4000, 4000),
            "meaning": [cat("use", "city")],
        },
        {
            "id": "community-a",
            "level": 1,
            "parent": "city",
            "time": instant("2022-05-01", "12:00:00"),
            "geometry": rect(250, 250, 1750, 1750),
            "meaning": [cat("use", "residential"),
                        ordn("noise", "quiet", noise_levels)],
        },
        {
            "id": "community-b",
            "level": 1,
            "parent": "city",
            "time": instant("2022-05-01", "12:00:00"),
            "geometry": rect(2250, 2250, 3750, 3750),
            "meaning": [cat("use", "commercial"),
                        ordn("noise", "loud", noise_levels)],
        },
        {
            "id": "cafe-east",
            "level": 2,
            "parent": "community-b",
            "time": instant("2022-05-01", "09:30:00"),
            "geometry": point(2500, 2500),
            "meaning": [cat("use", "cafe"),
                        num("rent", 18.0, 0, 40, 1, "economic"),
                        ordn("noise", "lively", noise_levels)],
        },
        {
            "id": "corner-bar",
            "level": 2,
            "parent": "community-b",
            "time": instant("2022-05-01", "21:00:00"),
            "geometry": point(3600, 3600),
            "meaning": [cat("use", "bar"),
                        num("rent", 25.0, 0, 40, 1, "economic"),
                        ordn("noise", "loud", noise_levels)],
        },
        {
            "id": "home-garden",
            "level": 2,
            "parent": "community-a",
            "time": instant("2022-05-01", "18:00:00"),
            "geometry": square(600, 600, 30),
            "meaning": [cat("use", "garden", None, "emotional"),
                        num("rent", 6.0, 0, 40, 1, "economic"),
                        ordn("noise", "quiet", noise_levels)],
        },
        {
            "id": "playground",
            "level": 2,
            "parent": "community-a",
            "time": instant("2022-05-01", "16:00:00"),
            "geometry": square(1500, 1200, 40),
            "meaning": [cat("use", "play", None, "emotional"),
                        ordn("noise", "lively", noise_levels)],
        },
    ]
    write("fig1-scales.json", {
        "format_version": "1",
        "crs": "planar-m",
        "records": records,
    })


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    table1_canon()
    table3_canon()
    attabad_records()
    attabad_timelines()
    eferding_milestones()
    eferding_records()
    fig1_scales()


if __name__ == "__main__":
    main()
