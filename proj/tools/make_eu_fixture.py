#!/usr/bin/env python3
# Copyright 2026 The co2attr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate the bundled EU-23 emissions panel (data/eu23_emissions_wide.csv).

The panel is a synthetic reconstruction: EU-23 aggregate trajectories per
fuel category follow hand-placed knots that trace the published shape of
CDIAC national totals, and are split across countries with time-varying
shares. The 2008 gas column reproduces the country table shipped in
data/eu_gas_2008.csv exactly. Output is deterministic for a fixed seed.
"""

import argparse
import csv

import numpy as np

YEARS = list(range(1959, 2009))

COUNTRIES = [
    "AUSTRIA", "BELGIUM", "BULGARIA", "CYPRUS", "CZECH REP.", "DENMARK",
    "FINLAND", "FRANCE", "GERMANY", "GREECE", "HUNGARY", "IRELAND", "ITALY",
    "LUXEMBOURG", "MALTA", "NETHERLANDS", "POLAND", "PORTUGAL", "ROMANIA",
    "SLOVAKIA", "SPAIN", "SWEDEN", "UK",
]

GAS_2008 = {
    "GERMANY": 85457, "POLAND": 58395, "UK": 37306, "CZECH REP.": 21021,
    "ITALY": 16855, "SPAIN": 14669, "FRANCE": 13383, "ROMANIA": 9805,
    "GREECE": 8946, "BULGARIA": 8058, "NETHERLANDS": 7346, "FINLAND": 5478,
    "BELGIUM": 4361, "SLOVAKIA": 4205, "DENMARK": 4062, "AUSTRIA": 3896,
    "HUNGARY": 3275, "PORTUGAL": 2644, "SWEDEN": 2530, "IRELAND": 2519,
    "LUXEMBOURG": 86, "CYPRUS": 29, "MALTA": 0,
}

# EU-23 aggregate knots, thousand metric tons of carbon.
KNOTS = {
    "solid": {1959: 330000, 1970: 320000, 1980: 350000, 1990: 320000,
              2000: 240000, 2008: 230000},
    "liquid": {1959: 95000, 1965: 170000, 1970: 270000, 1973: 330000,
               1975: 305000, 1979: 340000, 1983: 270000, 1990: 280000,
               2000: 290000, 2005: 295000, 2008: 285000},
    "gas": {1959: 6000, 1965: 15000, 1970: 45000, 1975: 95000,
            1980: 130000, 1985: 150000, 1990: 170000, 1995: 215000,
            2000: 255000, 2005: 300000, 2008: 314326},
    "cement": {1959: 9000, 1970: 17000, 1975: 19000, 1980: 20000,
               1990: 19000, 2000: 18000, 2008: 19000},
    "flares": {1959: 300, 1965: 800, 1970: 1500, 1975: 2200, 1980: 1900,
               1985: 1500, 1990: 1100, 1995: 900, 2000: 800, 2008: 600},
    "bunker": {1959: 18000, 1965: 24000, 1970: 33000, 1973: 38000,
               1975: 33000, 1980: 36000, 1985: 33000, 1990: 38000,
               2000: 48000, 2005: 55000, 2008: 58000},
}

ECONOMY = {
    "GERMANY": 0.25, "UK": 0.16, "FRANCE": 0.13, "ITALY": 0.12, "SPAIN": 0.08,
    "POLAND": 0.06, "NETHERLANDS": 0.05, "BELGIUM": 0.035, "CZECH REP.": 0.03,
    "ROMANIA": 0.03, "GREECE": 0.025, "SWEDEN": 0.015, "AUSTRIA": 0.02,
    "HUNGARY": 0.015, "PORTUGAL": 0.015, "BULGARIA": 0.012, "DENMARK": 0.014,
    "FINLAND": 0.014, "SLOVAKIA": 0.01, "IRELAND": 0.012, "LUXEMBOURG": 0.003,
    "CYPRUS": 0.002, "MALTA": 0.001,
}

GAS_1959 = {
    "ROMANIA": 0.30, "ITALY": 0.25, "FRANCE": 0.12, "GERMANY": 0.12,
    "NETHERLANDS": 0.06, "UK": 0.03, "AUSTRIA": 0.04, "HUNGARY": 0.04,
    "POLAND": 0.03, "CZECH REP.": 0.01,
}

FLARES = {"UK": 0.35, "NETHERLANDS": 0.15, "ROMANIA": 0.15, "ITALY": 0.1,
          "DENMARK": 0.1, "GERMANY": 0.1, "POLAND": 0.05}

COLUMNS = {
    "solid": "Solid Fuel", "liquid": "Liquid Fuel", "gas": "Gas Fuel",
    "cement": "Cement", "flares": "Gas Flaring", "bunker": "Bunker fuels",
}


def interp(knots):
    xs = sorted(knots)
    return np.interp(YEARS, xs, [knots[x] for x in xs])


def shares(start, end):
    """Linearly drifting country shares, normalized per year."""
    t = np.linspace(0.0, 1.0, len(YEARS))
    out = {}
    for c in COUNTRIES:
        out[c] = (1 - t) * start.get(c, 0.0) + t * end.get(c, 0.0)
    total = sum(out.values())
    return {c: v / total for c, v in out.items()}


def ar1_noise(rng, n, sigma, rho):
    e = np.zeros(n)
    e[0] = rng.normal(0, sigma)
    for i in range(1, n):
        e[i] = rho * e[i - 1] + rng.normal(0, sigma) * np.sqrt(1 - rho * rho)
    return e


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20130601)
    ap.add_argument("--out", default="data/eu23_emissions_wide.csv")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    gas_end = {c: v / sum(GAS_2008.values()) for c, v in GAS_2008.items()}
    share_tables = {
        "solid": shares(ECONOMY, ECONOMY),
        "liquid": shares(ECONOMY, ECONOMY),
        "gas": shares(GAS_1959, gas_end),
        "cement": shares(ECONOMY, ECONOMY),
        "flares": shares(FLARES, FLARES),
        "bunker": shares(ECONOMY, ECONOMY),
    }

    panel = {c: {y: {} for y in YEARS} for c in COUNTRIES}
    for factor, knots in KNOTS.items():
        agg = interp(knots) * np.exp(ar1_noise(rng, len(YEARS), 0.015, 0.5))
        for c in COUNTRIES:
            local = np.exp(rng.normal(0, 0.02, len(YEARS)))
            for idx, y in enumerate(YEARS):
                v = agg[idx] * share_tables[factor][c][idx] * local[idx]
                panel[c][y][factor] = None if v < 1.0 else int(round(v))

    for c, v in GAS_2008.items():
        panel[c][2008]["gas"] = v

    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["Nation", "Year", "Total Fossil Fuel Emissions"]
                   + [COLUMNS[f] for f in KNOTS])
        for c in COUNTRIES:
            for y in YEARS:
                rec = panel[c][y]
                total = sum(rec[f] or 0 for f in KNOTS if f != "bunker")
                w.writerow([c, y, total] + ["" if rec[f] is None else rec[f]
                                            for f in KNOTS])


if __name__ == "__main__":
    main()
