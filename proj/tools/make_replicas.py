#!/usr/bin/env python3
# Copyright 2026 The itclust Authors.
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

"""Generates the bundled stand-ins for the aggregation, flame and spiral sets.

Each file holds tab-separated "x y class" rows. Output is a pure function of
the seed, so regenerating rewrites identical bytes.
"""

import argparse
import pathlib

import numpy as np


def peaked(rng, inside, centre, sigma, count):
    """Gaussian draws around `centre`, kept only inside the region."""
    pts = []
    while len(pts) < count:
        q = rng.normal(centre, sigma)
        if inside(q):
            pts.append(q)
    return np.asarray(pts)


def ellipse(cx, cy, rx, ry):
    return lambda q: ((q[0] - cx) / rx) ** 2 + ((q[1] - cy) / ry) ** 2 <= 1.0


def blob(rng, cx, cy, rx, ry, count):
    return peaked(rng, ellipse(cx, cy, rx, ry), (cx, cy), (0.5 * rx, 0.5 * ry), count)


def bridge(a, b, count):
    t = np.linspace(0.0, 1.0, count + 2)[1:-1]
    return np.outer(1 - t, a) + np.outer(t, b)


def aggregation(rng):
    # Class sizes follow the original file: 45, 170, 102, 273, 34, 130, 34.
    parts = [
        blob(rng, 6.0, 23.0, 3.2, 3.8, 45),
        blob(rng, 13.5, 22.5, 5.2, 5.2, 164),
        blob(rng, 31.5, 21.5, 4.4, 4.4, 102),
        blob(rng, 11.0, 8.5, 7.4, 6.9, 265),
        blob(rng, 21.5, 5.0, 2.2, 2.6, 34),
        blob(rng, 26.0, 10.5, 4.7, 4.6, 130),
        blob(rng, 36.0, 8.0, 2.2, 2.6, 34),
    ]
    # Thin bridges: 1 -> 0 and 3 -> 5, mimicking the touching pairs.
    parts[1] = np.vstack([parts[1], bridge((8.8, 22.8), (8.0, 22.9), 6)])
    parts[3] = np.vstack([parts[3], bridge((18.0, 9.5), (21.4, 10.0), 8)])
    return parts


def flame(rng):
    def top(q):
        x, y = q
        if y < 19.8 or y > 27.5:
            return False
        half = 4.2 * np.sin(np.pi * (y - 19.8) / 7.7) ** 0.8 + 1.2
        return abs(x - 7.2 + 0.25 * (y - 22.0)) <= half and ellipse(7.2, 22.5, 5.5, 6.0)(q)

    def base(q):
        x, y = q
        if not (0.5 <= x <= 14.0 and 14.0 <= y <= 21.5):
            return False
        upper = 17.6 + 2.8 * np.exp(-((x - 7.2) / 4.2) ** 2) - 1.2 * np.exp(-((x - 7.2) / 1.6) ** 2)
        return y <= upper - 0.4 + (1.8 if abs(x - 7.2) > 3.0 else 0.0) and ellipse(7.2, 17.0, 6.8, 3.6)(q)

    top_pts = peaked(rng, top, (7.0, 23.2), (1.8, 2.2), 85)
    base_pts = peaked(rng, lambda q: base(q) and not top(q), (7.2, 16.4), (3.4, 1.5), 153)
    outliers = np.array([[1.0, 28.5], [2.0, 29.0]])
    return [np.vstack([top_pts, outliers]), base_pts]


def spiral(rng):  # noqa: ARG001 (deterministic)
    parts = []
    for arm, count in enumerate((106, 101, 105)):
        theta = np.linspace(0.55, 0.55 + 3.4 * np.pi, count)
        phase = 2.0 * np.pi * arm / 3.0
        radius = 1.6 * theta
        x = 17.0 + radius * np.cos(theta + phase)
        y = 17.0 + radius * np.sin(theta + phase)
        parts.append(np.column_stack([x, y]))
    return parts


GENERATORS = {
    "aggregation": (aggregation, 20260301),
    "flame": (flame, 20260302),
    "spiral": (spiral, 20260303),
}


def write(path, parts):
    rows = []
    for cls, pts in enumerate(parts, start=1):
        for x, y in np.round(pts, 2):
            rows.append(f"{x:.2f}\t{y:.2f}\t{cls}\n")
    path.write_text("".join(rows))
    return len(rows)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("data"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, (make, seed) in GENERATORS.items():
        n = write(args.out / f"{name}.txt", make(np.random.default_rng(seed)))
        print(f"{name}: {n} points")


if __name__ == "__main__":
    main()
