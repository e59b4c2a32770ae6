#!/usr/bin/env python3
# Copyright 2026 The Geopriv Authors
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
"""Writes a synthetic check-in file in the SNAP Gowalla TSV layout.

Venues cluster around a handful of neighborhood centers inside the San
Francisco box; users favor venues near their home neighborhood. Output is
deterministic for a given seed.
"""

import argparse
import datetime

import numpy as np

LAT0, LAT1 = 37.55, 37.85
LON0, LON1 = -122.55, -122.25
M_PER_DEG_LAT = 111195.0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--checkins", type=int, default=10000)
    ap.add_argument("--users", type=int, default=700)
    ap.add_argument("--venues", type=int, default=600)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    m_per_deg_lon = M_PER_DEG_LAT * np.cos(np.radians(0.5 * (LAT0 + LAT1)))

    n_hoods = 14
    hoods = np.column_stack([
        rng.uniform(LAT0 + 0.05, LAT1 - 0.06, n_hoods),
        rng.uniform(LON0 + 0.08, LON1 - 0.05, n_hoods),
    ])
    hood_of_venue = rng.integers(0, n_hoods, args.venues)
    spread_m = rng.uniform(300.0, 1200.0, n_hoods)[hood_of_venue]
    venues = hoods[hood_of_venue] + np.column_stack([
        rng.normal(0.0, spread_m) / M_PER_DEG_LAT,
        rng.normal(0.0, spread_m) / m_per_deg_lon,
    ])
    venues[:, 0] = np.clip(venues[:, 0], LAT0 + 1e-4, LAT1 - 1e-4)
    venues[:, 1] = np.clip(venues[:, 1], LON0 + 1e-4, LON1 - 1e-4)
    popularity = 1.0 / np.arange(1, args.venues + 1) ** 0.8
    rng.shuffle(popularity)

    home = rng.integers(0, n_hoods, args.users)
    activity = rng.pareto(1.2, args.users) + 1.0
    per_user = np.maximum(1, np.floor(activity / activity.sum() * args.checkins))
    while per_user.sum() < args.checkins:
        per_user[rng.integers(0, args.users)] += 1
    while per_user.sum() > args.checkins:
        i = rng.integers(0, args.users)
        if per_user[i] > 1:
            per_user[i] -= 1

    start = datetime.datetime(2010, 2, 1, tzinfo=datetime.timezone.utc)
    lines = []
    for user in range(args.users):
        local = np.where(hood_of_venue == home[user], 6.0, 1.0) * popularity
        local /= local.sum()
        picks = rng.choice(args.venues, int(per_user[user]), p=local)
        for v in picks:
            t = start + datetime.timedelta(seconds=int(rng.integers(0, 270 * 86400)))
            lines.append("%d\t%s\t%.10f\t%.10f\t%d" % (
                user, t.strftime("%Y-%m-%dT%H:%M:%SZ"), venues[v, 0], venues[v, 1],
                100000 + v))
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
