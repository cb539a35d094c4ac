"""``jc-lab`` command line: run config files, reproduce figure presets, self-test.

Config files are INI-style, one scenario per section::

    [coherent_pcd]
    kind = pcd
    n_c = 25
    n_s = 1
    n_th = 0
    ordering = SCTS
    out = out/coherent_pcd

A section may start from a figure preset (``preset = fig3b``) and override
individual keys.
"""

from __future__ import annotations

import argparse
import configparser
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import jc, stats
from .errors import JcLabError
from .output import atomic_write_text, csv_text, svg_text
from .presets import FigurePreset, get_preset, list_presets
from .states import FieldSpec, Ordering, density_auto, pcd, pcd_closed_form, pcd_oracle

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3
KINDS = ("pcd", "inversion", "negativity", "g2_sweep")
DEFAULT_OUT = Path("out")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class Scenario:
    kind: str
    spec: FieldSpec
    stem: Path
    t_max: float = jc.T_MAX
    t_points: int = jc.T_POINTS
    axis: str = "over_NS"
    lo: float = 0.0
    hi: float = 3.0
    points: int = stats.SWEEP_POINTS
    title: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.t_max <= 0 or self.t_points < 2:
            raise ConfigError("time grid needs t_max > 0 and t_points >= 2")
        if self.kind == "g2_sweep":
            if self.axis not in ("over_NS", "over_NTH"):
                raise ConfigError(f"axis must be over_NS or over_NTH, got {self.axis!r}")
            if self.lo < 0 or self.hi <= self.lo or self.points < 2:
                raise ConfigError("sweep needs 0 <= lo < hi and points >= 2")


def scenario_from_preset(p: FigurePreset, out_dir: Path = DEFAULT_OUT) -> Scenario:
    extra = {}
    if p.kind == "g2_sweep":
        extra = dict(axis=p.axis, lo=p.lo, hi=p.hi)
    title = f"{p.id}: {p.ordering.value} (N_C, N_S, N_th) = ({p.n_c:g}, {p.n_s:g}, {p.n_th:g})"
    return Scenario(p.kind, p.field(), Path(out_dir) / p.id, title=title, **extra)


_FLOAT_KEYS = ("n_c", "n_s", "n_th", "alpha_phase", "squeeze_phase", "t_max", "lo", "hi")
_INT_KEYS = ("t_points", "points")
_KNOWN = set(_FLOAT_KEYS + _INT_KEYS + ("kind", "ordering", "axis", "out", "preset"))


def parse_config(text: str, out_dir: Path = DEFAULT_OUT) -> list[Scenario]:
    cp = configparser.ConfigParser(interpolation=None)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc
    if not cp.sections():
        raise ConfigError("config has no scenario sections")
    return [_section_scenario(name, cp[name], out_dir) for name in cp.sections()]


def _section_scenario(name: str, sec, out_dir: Path) -> Scenario:
    unknown = set(sec.keys()) - _KNOWN
    if unknown:
        raise ConfigError(f"[{name}] unknown keys: {', '.join(sorted(unknown))}")
    vals: dict = {}
    if "preset" in sec:
        try:
            base = scenario_from_preset(get_preset(sec["preset"]), out_dir)
        except KeyError as exc:
            raise ConfigError(f"[{name}] {exc.args[0]}") from None
        s = base.spec
        vals = dict(kind=base.kind, axis=base.axis, lo=base.lo, hi=base.hi,
                    n_c=s.n_c, n_s=s.n_s, n_th=s.n_th, ordering=s.ordering.value)
    try:
        for k in _FLOAT_KEYS:
            if k in sec:
                vals[k] = float(sec[k])
        for k in _INT_KEYS:
            if k in sec:
                vals[k] = int(sec[k])
    except ValueError as exc:
        raise ConfigError(f"[{name}] {exc}") from None
    for k in ("kind", "ordering", "axis"):
        if k in sec:
            vals[k] = sec[k].strip()
    if "kind" not in vals:
        raise ConfigError(f"[{name}] missing 'kind'")
    try:
        spec = FieldSpec(
            vals.get("n_c", 0.0), vals.get("n_s", 0.0), vals.get("n_th", 0.0),
            vals.get("alpha_phase", 0.0), vals.get("squeeze_phase", 0.0),
            Ordering(vals.get("ordering", "SCTS").upper()),
        )
    except ValueError as exc:
        raise ConfigError(f"[{name}] {exc}") from None
    stem = Path(sec["out"]) if "out" in sec else Path(out_dir) / name
    grid = {k: vals[k] for k in ("t_max", "t_points", "axis", "lo", "hi", "points") if k in vals}
    return Scenario(vals["kind"], spec, stem, title=name, **grid)


def run_scenario(s: Scenario) -> list[Path]:
    """Compute one scenario and write ``<stem>.csv`` and ``<stem>.svg``."""
    trailer = None
    if s.kind == "pcd":
        p = pcd(s.spec)
        n = list(range(p.probs.size))
        rows = list(zip(n, p.probs))
        header, xlabel, ylabel = ("n", "p"), "n", "P(n)"
        series = [(n, p.probs, "")]
    elif s.kind in ("inversion", "negativity"):
        times = jc.default_times(s.t_max, s.t_points)
        params = jc.JcParams()
        if s.kind == "inversion":
            ts = jc.inversion_diagonal(pcd(s.spec), params, times)
            ylabel = "W(t)"
        else:
            rho, _ = density_auto(s.spec)
            ts = jc.negativity(jc.initial_joint(rho), params, times, method="lowrank")
            ylabel = "N(t)"
        rows = list(zip(ts.times, ts.values))
        header, xlabel = ("lambda_t", "value"), "lambda t"
        series = [(ts.times, ts.values, "")]
    else:
        res = stats.g2_sweep(s.spec, s.axis, s.lo, s.hi, s.points)
        rows = res.points
        header = ("param", "g2")
        xlabel = "N_S" if s.axis == "over_NS" else "N_th"
        ylabel = "G2(0)"
        trailer = "# crossings: " + ",".join(f"{c:.12g}" for c in res.crossings)
        xs = [x for x, _ in rows]
        series = [(xs, [g for _, g in rows], "G2(0)"), (xs, [1.0] * len(xs), "G2(0) = 1")]

    csv_path = s.stem.with_name(s.stem.name + ".csv")
    svg_path = s.stem.with_name(s.stem.name + ".svg")
    atomic_write_text(csv_path, csv_text(header, rows, trailer))
    atomic_write_text(svg_path, svg_text(series, s.title, xlabel, ylabel))
    return [csv_path, svg_path]


# ---------------------------------------------------------------- selftest


def selftest(verbose: bool = True) -> bool:
    """Closed form vs matrix route for every thermal figure triple, plus the
    inversion and negativity cross-routes on a small field."""
    ok = True

    def report(name, err, tol):
        nonlocal ok
        good = err < tol
        ok &= good
        if verbose:
            print(f"{'PASS' if good else 'FAIL'}  {name:<38} err={err:.2e} tol={tol:.0e}")

    triples = [(p.field(), p.id) for p in list_presets()
               if p.kind == "pcd" and p.n_th > 0]
    for spec, pid in triples:
        rho, tr = density_auto(spec)
        oracle = np.real(np.diag(rho))
        closed = pcd_closed_form(spec, tr.n_max).probs
        report(f"pcd closed form vs oracle {pid}", float(np.max(np.abs(closed - oracle))), 1e-8)

    spec = FieldSpec(9, 0.5, 0.5)
    times = jc.default_times(20.0, 201)
    params = jc.JcParams()
    state = jc.initial_joint(density_auto(spec)[0])
    w_diag = jc.inversion_diagonal(pcd_oracle(spec), params, times).values
    w_full = jc.inversion_full(state, params, times).values
    report("inversion diagonal vs full", float(np.max(np.abs(w_diag - w_full))), 1e-8)
    n_direct = jc.negativity(state, params, times[::10]).values
    n_low = jc.negativity(state, params, times[::10], method="lowrank").values
    report("negativity direct vs low-rank", float(np.max(np.abs(n_direct - n_low))), 1e-8)
    return ok


# ---------------------------------------------------------------- entry point


def _run_many(scenarios) -> int:
    for s in scenarios:
        paths = run_scenario(s)
        print(" ".join(str(p) for p in paths))
    return EXIT_OK


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="jc-lab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)
    p_run = sub.add_parser("run", help="run every scenario in a config file")
    p_run.add_argument("config")
    p_run.add_argument("--out", default=str(DEFAULT_OUT), help="default output directory")
    p_pre = sub.add_parser("preset", help="reproduce one figure panel or curve")
    p_pre.add_argument("id")
    p_pre.add_argument("--out", default=str(DEFAULT_OUT))
    sub.add_parser("list-presets", help="list figure presets")
    sub.add_parser("selftest", help="run the oracle-equivalence checks")
    args = ap.parse_args(argv)

    try:
        if args.cmd == "list-presets":
            print("id,kind,ordering,n_c,n_s,n_th,axis,lo,hi")
            for p in list_presets():
                axis = f"{p.axis},{p.lo:g},{p.hi:g}" if p.axis else ",,"
                print(f"{p.id},{p.kind},{p.ordering.value},{p.n_c:g},{p.n_s:g},{p.n_th:g},{axis}")
            return EXIT_OK
        if args.cmd == "selftest":
            return EXIT_OK if selftest() else EXIT_NUMERIC
        if args.cmd == "preset":
            try:
                preset = get_preset(args.id)
            except KeyError as exc:
                raise ConfigError(exc.args[0]) from None
            return _run_many([scenario_from_preset(preset, Path(args.out))])
        try:
            text = Path(args.config).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
        return _run_many(parse_config(text, Path(args.out)))
    except (ConfigError, ValueError) as exc:
        print(f"jc-lab: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (JcLabError, FloatingPointError) as exc:
        print(f"jc-lab: numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"jc-lab: I/O error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
