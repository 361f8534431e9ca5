"""Filling holes by the quadrangle criterion alone.

A hole ``d`` is filled when some writing ``(d1, d2, d3, d)`` has its first
three cells filled and a fully filled writing ``(c1, c2, c3, c4)`` of the same
orientation matches it on the first three values; ``d`` then gets the value of
``c4``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .tables import Cell, CayleyMatrix, PartialMatrix, Writing, orientation, writings_through


class Mode(str, enum.Enum):
    QUADRANGLE = "quadrangle_only"
    QUADRANGLE_LATIN = "quadrangle_plus_latin"

    @classmethod
    def parse(cls, text: Union[str, "Mode"]) -> "Mode":
        if isinstance(text, cls):
            return text
        aliases = {"quadrangle": cls.QUADRANGLE, "quadrangle_only": cls.QUADRANGLE,
                   "quadrangle+latin": cls.QUADRANGLE_LATIN,
                   "quadrangle_plus_latin": cls.QUADRANGLE_LATIN}
        try:
            return aliases[text]
        except KeyError:
            raise ValueError(f"unknown mode {text!r}") from None


class Status(str, enum.Enum):
    FILLED = "filled"
    COMPLETE = "complete"
    STUCK = "stuck"
    CONTRADICTION = "contradiction"


def _cells(w: Optional[Writing]):
    return None if w is None else [list(c) for c in w]


@dataclass(frozen=True)
class FillResult:
    status: Status
    value: Optional[int] = None
    target: Optional[Writing] = None
    witness: Optional[Writing] = None
    conflicts: tuple = ()
    targets_examined: int = 0

    def __bool__(self):
        return self.status is Status.FILLED


class _Index:
    """Value positions of a partial matrix, kept in sync with fills."""

    def __init__(self, p: PartialMatrix):
        n = p.n
        self.n = n
        self.grid = [list(r) for r in p.cells]
        self.by_value: list[list[Cell]] = [[] for _ in range(len(p.universe))]
        self.in_row: list[dict[int, list[int]]] = [{} for _ in range(n)]
        self.in_col: list[dict[int, list[int]]] = [{} for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = self.grid[i][j]
                if v is not None:
                    self._add(i, j, v)
        for cells in self.by_value:
            cells.sort()

    def _add(self, i, j, v):
        self.by_value[v].append(Cell(i, j))
        self.in_row[i].setdefault(v, []).append(j)
        self.in_col[j].setdefault(v, []).append(i)

    def set(self, i, j, v):
        self.grid[i][j] = v
        self._add(i, j, v)
        self.by_value[v].sort()
        self.in_row[i][v].sort()
        self.in_col[j][v].sort()

    def witnesses(self, target: Writing):
        """Fully filled writings matching ``target`` on positions 1-3, anchor row-major."""
        g = self.grid
        v1, v2, v3 = (g[c.row][c.col] for c in target[:3])
        col_first = orientation(target) == "col"
        for r2, c2 in self.by_value[v2]:
            if col_first:
                firsts = [(r1, c2) for r1 in self.in_col[c2].get(v1, ()) if r1 != r2]
                thirds = [(r2, c1) for c1 in self.in_row[r2].get(v3, ()) if c1 != c2]
            else:
                firsts = [(r2, c1) for c1 in self.in_row[r2].get(v1, ()) if c1 != c2]
                thirds = [(r1, c2) for r1 in self.in_col[c2].get(v3, ()) if r1 != r2]
            for a in firsts:
                for c in thirds:
                    four = (a[0], c[1]) if col_first else (c[0], a[1])
                    v4 = g[four[0]][four[1]]
                    if v4 is not None:
                        yield (Cell(*a), Cell(r2, c2), Cell(*c), Cell(*four)), v4

    def find_fill(self, d: Cell, paranoid: bool = False) -> FillResult:
        g = self.grid
        found: dict[int, tuple[Writing, Writing]] = {}
        examined = 0
        for target in writings_through(self.n, d):
            if any(g[c.row][c.col] is None for c in target[:3]):
                continue
            examined += 1
            for witness, v4 in self.witnesses(target):
                if not paranoid:
                    return FillResult(Status.FILLED, v4, target, witness, targets_examined=examined)
                found.setdefault(v4, (target, witness))
        if not found:
            return FillResult(Status.STUCK, targets_examined=examined)
        if len(found) > 1:
            pairs = tuple((v, t, w) for v, (t, w) in sorted(found.items()))
            return FillResult(Status.CONTRADICTION, conflicts=pairs, targets_examined=examined)
        (v, (t, w)), = found.items()
        return FillResult(Status.FILLED, v, t, w, targets_examined=examined)

    def latin_fill(self, d: Cell, universe_size: int) -> Optional[int]:
        """The missing symbol when d's row or column already holds n-1 distinct values."""
        i, j = d
        for line in (self.grid[i], [r[j] for r in self.grid]):
            present = {v for v in line if v is not None}
            if len(present) == universe_size - 1:
                (v,) = set(range(universe_size)) - present
                return v
        return None

    def to_partial(self, universe) -> PartialMatrix:
        return PartialMatrix(self.grid, universe)


def find_fill(p: PartialMatrix, d: tuple[int, int], paranoid: bool = False) -> FillResult:
    """Try to fill hole ``d`` from the current filled cells.

    Without ``paranoid`` the first witness under the row-major scan wins.
    With it, every target writing is checked and disagreeing witnesses are
    reported as a contradiction.
    """
    d = Cell(*d)
    if p[d] is not None:
        raise ValueError(f"cell {tuple(d)} is not a hole")
    return _Index(p).find_fill(d, paranoid)


@dataclass(frozen=True)
class Fill:
    cell: Cell
    value: int
    rule: str
    target: Optional[Writing] = None
    witness: Optional[Writing] = None

    def to_dict(self) -> dict:
        return {"cell": list(self.cell), "value": self.value, "rule": self.rule,
                "target": _cells(self.target), "witness": _cells(self.witness)}


@dataclass
class ReconstructionReport:
    status: Status
    mode: Mode
    fills: list[Fill]
    grid: PartialMatrix
    order: list[Cell]
    at: Optional[Cell] = None
    conflicts: tuple = ()

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    def to_dict(self) -> dict:
        d = {"status": self.status.value, "mode": self.mode.value,
             "order": [list(c) for c in self.order],
             "fills": [f.to_dict() for f in self.fills]}
        if self.at is not None:
            d["at"] = list(self.at)
        if self.conflicts:
            d["conflicts"] = [{"value": v, "target": _cells(t), "witness": _cells(w)}
                              for v, t, w in self.conflicts]
        return d


def reconstruct(p: PartialMatrix, order: Optional[Sequence[tuple[int, int]]] = None,
                mode: Union[str, Mode] = Mode.QUADRANGLE,
                paranoid: bool = False) -> ReconstructionReport:
    """Fill the holes strictly in ``order`` (row-major by default), stopping at the
    first hole that cannot be filled."""
    mode = Mode.parse(mode)
    holes = p.holes
    order = holes if order is None else [Cell(*c) for c in order]
    if len(order) != len(set(order)) or set(order) != set(holes):
        raise ValueError("order must list every hole exactly once")

    idx = _Index(p)
    fills: list[Fill] = []
    for d in order:
        res = idx.find_fill(d, paranoid)
        if res.status is Status.FILLED:
            idx.set(d.row, d.col, res.value)
            fills.append(Fill(d, res.value, "quadrangle", res.target, res.witness))
            continue
        if res.status is Status.CONTRADICTION:
            return ReconstructionReport(Status.CONTRADICTION, mode, fills,
                                        idx.to_partial(p.universe), order, d, res.conflicts)
        if mode is Mode.QUADRANGLE_LATIN:
            v = idx.latin_fill(d, len(p.universe))
            if v is not None:
                idx.set(d.row, d.col, v)
                fills.append(Fill(d, v, "latin"))
                continue
        return ReconstructionReport(Status.STUCK, mode, fills,
                                    idx.to_partial(p.universe), order, d)
    return ReconstructionReport(Status.COMPLETE, mode, fills, idx.to_partial(p.universe), order)


def saturate(p: PartialMatrix) -> tuple[PartialMatrix, list[Fill]]:
    """Sweep all holes repeatedly, filling whatever the criterion allows, until
    a sweep makes no progress."""
    idx = _Index(p)
    fills: list[Fill] = []
    remaining = p.holes
    progress = True
    while remaining and progress:
        progress = False
        left = []
        for d in remaining:
            res = idx.find_fill(d)
            if res:
                idx.set(d.row, d.col, res.value)
                fills.append(Fill(d, res.value, "quadrangle", res.target, res.witness))
                progress = True
            else:
                left.append(d)
        remaining = left
    return idx.to_partial(p.universe), fills


# -- proof diagnostics ------------------------------------------------------

@dataclass(frozen=True)
class HoleAnalysis:
    """Hole partition around ``d`` and exact counts of usable quadrangles.

    ``tx`` counts other holes in d's column, ``ty`` other holes in d's row.
    Quadrangles are counted once each, written with position 1 in d's row.
    """
    n: int
    d: Cell
    t: int
    t0: int
    tx: int
    ty: int
    tau_bound: int
    count_c1c3: int
    count_c1c2c3: int
    per_a: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {"n": self.n, "d": list(self.d), "t": self.t, "t0": self.t0, "tx": self.tx,
                "ty": self.ty, "tau_bound": self.tau_bound, "count_c1c3": self.count_c1c3,
                "count_c1c2c3": self.count_c1c2c3, "per_a": list(self.per_a)}


def tau_bound(n: int, t0: int, tx: int, ty: int) -> int:
    return (n - 1) * (n - 3) - t0 - (tx + ty) * (n - 2)


def analyze_hole(m: CayleyMatrix, holes: Iterable[tuple[int, int]],
                 d: tuple[int, int]) -> HoleAnalysis:
    holes = {Cell(*h) for h in holes}
    d = Cell(*d)
    if d not in holes:
        raise ValueError(f"{tuple(d)} is not among the holes")
    n = m.n
    v = m.values
    tx = sum(1 for h in holes if h != d and h.col == d.col)
    ty = sum(1 for h in holes if h != d and h.row == d.row)
    t = len(holes)
    t0 = t - 1 - tx - ty

    c1c3 = c1c2c3 = 0
    per_a = []
    r, c = d
    for j in range(n):
        if j == c:
            continue
        a = Cell(r, j)
        k = 0
        for i in range(n):
            if i == r:
                continue
            b, cc = Cell(i, j), Cell(i, c)
            if v[a.row][a.col] == v[cc.row][cc.col] or v[b.row][b.col] == v[r][c]:
                continue
            k += 1
            if not ({a, b, cc} & holes):
                c1c2c3 += 1
        c1c3 += k
        per_a.append(k)
    return HoleAnalysis(n, d, t, t0, tx, ty, tau_bound(n, t0, tx, ty), c1c3, c1c2c3,
                        tuple(per_a))
