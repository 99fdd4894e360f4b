"""Sweep a few families and report the range of the zero-energy parameter t.

For each soliton the critical parameter is t = -c / tau.  The scan reports
the observed extremes and whether each candidate endpoint is attained.
"""

from __future__ import annotations

from soliton_lab.scan import parse_grid, scan

SWEEPS = [
    ("R3.g_R.ii", "eta3=-9:9:10,g1=0:5:6", ["-1", "-1/4"]),
    ("R3.L.Ia.iii", "eta2=-5:5:6,eta3=-5:5:6", ["-1", "-1/4"]),
    ("R3.L.II.i", "eta1=-4:4:9,eta2=-4:4:9", ["-1", "-1/4"]),
    ("3D.IV1.sa", "alpha=-3:3:7,beta=-3:3:7,delta=-3:3:7", ["-1", "-1/2", "0"]),
]


def main() -> None:
    for fid, grid, endpoints in SWEEPS:
        res = scan(fid, parse_grid(grid), endpoints=endpoints, threads=2)
        print(f"{fid}: {len(res.strict_ts)} solitons, t in [{res.t_min}, {res.t_max}], kinds {res.kinds()}")
        for e in res.endpoints:
            where = f" at {e.attained_at}" if e.attained_at else ""
            print(f"    t = {e.value}: {e.verdict}{where} (best gap {e.best_gap:.1e})")


if __name__ == "__main__":
    main()
