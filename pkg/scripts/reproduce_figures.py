"""Write CSV and SVG output for every figure preset (or a chosen subset).

    python scripts/reproduce_figures.py --out out fig1 fig10a
"""

import argparse
import time
from pathlib import Path

from jclab.cli import run_scenario, scenario_from_preset
from jclab.presets import list_presets


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("select", nargs="*", help="figure ids (fig3) or preset ids (fig3b); default all")
    ap.add_argument("--out", default="out")
    args = ap.parse_args()
    chosen = [p for p in list_presets()
              if not args.select or p.id in args.select or p.figure in args.select]
    for p in chosen:
        t0 = time.perf_counter()
        csv, _ = run_scenario(scenario_from_preset(p, Path(args.out)))
        print(f"{p.id:<7} {p.kind:<10} {time.perf_counter() - t0:7.1f} s  {csv}")


if __name__ == "__main__":
    main()
