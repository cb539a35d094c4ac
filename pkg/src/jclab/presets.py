"""Figure presets: one entry per panel or curve of Figs. 1-15."""

from __future__ import annotations

from dataclasses import dataclass

from .states import FieldSpec, Ordering

TRIPLES_25 = [(25, 0, 0), (25, 0, 1), (25, 1, 0), (25, 1, 1), (25, 2, 1), (25, 2, 2)]
TRIPLES_49 = [(49, 0, 0), (49, 0, 1), (49, 1, 0), (49, 1, 1), (49, 2, 1), (49, 2, 2)]
# fixed N_th (sweeps over N_S) or fixed N_S (sweeps over N_th) of graphs A-E
SWEEP_LADDER = [0.5, 1.0, 1.5, 2.0, 2.5]
SWEEP_NC = 25


@dataclass(frozen=True)
class FigurePreset:
    id: str
    kind: str  # pcd | inversion | negativity | g2_sweep
    n_c: float
    n_s: float
    n_th: float
    ordering: Ordering
    axis: str | None = None
    lo: float = 0.0
    hi: float = 3.0

    @property
    def figure(self) -> str:
        return self.id.rstrip("abcdef")

    def field(self) -> FieldSpec:
        return FieldSpec(self.n_c, self.n_s, self.n_th, ordering=self.ordering)


def _panels(fig: int, kind: str, triples, ordering) -> list[FigurePreset]:
    return [
        FigurePreset(f"fig{fig}{'abcdef'[i]}", kind, *t, ordering=Ordering(ordering))
        for i, t in enumerate(triples)
    ]


def _sweeps(fig: int, ordering: str, axis: str, lo=0.0, hi=3.0, ladder=SWEEP_LADDER):
    out = []
    for i, fixed in enumerate(ladder):
        n_s, n_th = (0.0, fixed) if axis == "over_NS" else (fixed, 0.0)
        out.append(
            FigurePreset(
                f"fig{fig}{'abcde'[i]}", "g2_sweep", SWEEP_NC, n_s, n_th,
                Ordering(ordering), axis=axis, lo=lo, hi=hi,
            )
        )
    return out


def _build() -> dict[str, FigurePreset]:
    items = (
        _panels(1, "pcd", TRIPLES_25, "SCTS")
        + _panels(2, "pcd", TRIPLES_49, "SCTS")
        + _panels(3, "inversion", TRIPLES_25, "SCTS")
        + _panels(4, "inversion", TRIPLES_49, "SCTS")
        + _panels(5, "negativity", TRIPLES_25, "SCTS")
        + _panels(6, "negativity", TRIPLES_49, "SCTS")
        + _panels(7, "pcd", TRIPLES_25, "CSTS")
        + _panels(8, "inversion", TRIPLES_25, "CSTS")
        + _panels(9, "negativity", TRIPLES_25, "CSTS")
        + _sweeps(10, "SCTS", "over_NS")
        + _sweeps(11, "SCTS", "over_NTH")
        # zoomed views of graph A of Figs. 10 and 11
        + _sweeps(12, "SCTS", "over_NS", 0.0, 1.5, ladder=[0.5])
        + _sweeps(13, "SCTS", "over_NTH", 0.0, 1.0, ladder=[0.5])
        + _sweeps(14, "CSTS", "over_NS")
        + _sweeps(15, "CSTS", "over_NTH")
    )
    return {p.id: p for p in items}


PRESETS: dict[str, FigurePreset] = _build()


def list_presets() -> list[FigurePreset]:
    return list(PRESETS.values())


def get_preset(preset_id: str) -> FigurePreset:
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise KeyError(f"unknown preset {preset_id!r}") from None
