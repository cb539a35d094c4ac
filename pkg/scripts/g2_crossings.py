"""Zero-HBT crossings of every G2(0) sweep preset, next to the values quoted in the text."""

from jclab.presets import list_presets
from jclab.stats import g2_sweep

QUOTED = {
    "fig10a": [0.13, 1.13],
    "fig11a": [0.74], "fig11b": [0.56], "fig11c": [0.35], "fig11d": [0.21], "fig11e": [0.10],
    "fig14a": [0.26],
    "fig15a": [0.39],
}


def main():
    print(f"{'preset':<8}{'order':<6}{'axis':<10}{'fixed':>7}  crossings (quoted)")
    for p in list_presets():
        if p.kind != "g2_sweep":
            continue
        res = g2_sweep(p.field(), p.axis, p.lo, p.hi)
        fixed = p.n_th if p.axis == "over_NS" else p.n_s
        found = ", ".join(f"{c:.4f}" for c in res.crossings) or "none"
        quoted = QUOTED.get(p.id)
        print(f"{p.id:<8}{p.ordering.value:<6}{p.axis:<10}{fixed:>7g}  {found}"
              + (f"  ({', '.join(map(str, quoted))})" if quoted else ""))


if __name__ == "__main__":
    main()
