"""Matrices, partial matrices, quadrangles and the structural checks.

Values are element indices into a ``universe`` of display names.  A partial
matrix stores ``None`` for a hole.

Quadrangle writings carry an orientation: in a writing ``(a, b, c, d)`` the
corner ``a`` shares either a column or a row with ``b``.  Two writings are
compared only when their orientations agree.  For abelian groups this makes no
difference; for non-abelian ones, comparing across orientations would pit
``a b^-1 c`` against ``c b^-1 a`` and reject genuine group tables.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .algebra import GroupTable, verify_group


class Cell(NamedTuple):
    row: int
    col: int


Writing = tuple[Cell, Cell, Cell, Cell]


def _default_universe(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class CayleyMatrix:
    """A full n x n grid of element indices.

    Being a Cayley matrix is checked on demand (``is_cayley``), not enforced.
    """
    values: tuple[tuple[int, ...], ...]
    universe: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(tuple(r) for r in self.values))
        if not self.universe:
            object.__setattr__(self, "universe", _default_universe(len(self.values)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.values[cell[0]][cell[1]]

    def to_partial(self) -> "PartialMatrix":
        return PartialMatrix(self.values, self.universe)


@dataclass(frozen=True)
class PartialMatrix:
    cells: tuple[tuple[Optional[int], ...], ...]
    universe: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(r) for r in self.cells))
        if not self.universe:
            object.__setattr__(self, "universe", _default_universe(len(self.cells)))
        for i, row in enumerate(self.cells):
            if len(row) != len(self.cells):
                raise ValueError(f"row {i} has {len(row)} of {len(self.cells)} entries")
            for j, v in enumerate(row):
                if v is not None and not 0 <= v < len(self.universe):
                    raise ValueError(f"value {v} at ({i},{j}) outside the universe")

    @property
    def n(self) -> int:
        return len(self.cells)

    def __getitem__(self, cell: tuple[int, int]) -> Optional[int]:
        return self.cells[cell[0]][cell[1]]

    @property
    def holes(self) -> list[Cell]:
        """Holes in row-major order."""
        return [Cell(i, j) for i, row in enumerate(self.cells)
                for j, v in enumerate(row) if v is None]

    @property
    def hole_count(self) -> int:
        return sum(v is None for row in self.cells for v in row)

    @property
    def is_full(self) -> bool:
        return self.hole_count == 0

    def to_matrix(self) -> CayleyMatrix:
        if not self.is_full:
            raise ValueError(f"matrix has {self.hole_count} holes")
        return CayleyMatrix(self.cells, self.universe)

    def filled(self, updates: dict) -> "PartialMatrix":
        rows = [list(r) for r in self.cells]
        for (i, j), v in updates.items():
            rows[i][j] = v
        return PartialMatrix(rows, self.universe)


AnyMatrix = Union[CayleyMatrix, PartialMatrix, Sequence[Sequence[Optional[int]]]]


def _rows(m: AnyMatrix) -> tuple[tuple[Optional[int], ...], ...]:
    if isinstance(m, CayleyMatrix):
        return m.values
    if isinstance(m, PartialMatrix):
        return m.cells
    return tuple(tuple(r) for r in m)


def _full_rows(m: AnyMatrix) -> tuple[tuple[int, ...], ...]:
    rows = _rows(m)
    for i, row in enumerate(rows):
        if len(row) != len(rows):
            raise ValueError(f"row {i} has {len(row)} of {len(rows)} entries")
        if any(v is None for v in row):
            raise ValueError("matrix has holes; a full matrix is required")
    return rows  # type: ignore[return-value]


# -- quadrangles ------------------------------------------------------------

@dataclass(frozen=True)
class Quadrangle:
    """Corners of a 2x2 sub-block: a, c on one diagonal, b, d on the other."""
    a: Cell
    b: Cell
    c: Cell
    d: Cell

    def __post_init__(self):
        cells = [Cell(*x) for x in (self.a, self.b, self.c, self.d)]
        for name, x in zip("abcd", cells):
            object.__setattr__(self, name, x)
        rows = {x.row for x in cells}
        cols = {x.col for x in cells}
        if len(rows) != 2 or len(cols) != 2 or len(set(cells)) != 4:
            raise ValueError(f"degenerate quadrangle {cells}: needs two rows and two columns")
        a, b, c, d = cells
        if a.row == c.row or a.col == c.col or b.row == d.row or b.col == d.col:
            raise ValueError(f"{cells}: a, c and b, d must be diagonals")

    @classmethod
    def from_block(cls, rows: Iterable[int], cols: Iterable[int]) -> "Quadrangle":
        rows, cols = list(rows), list(cols)
        if len(rows) != 2 or len(cols) != 2:
            raise ValueError("a block needs exactly two rows and two columns")
        (r1, r2), (c1, c2) = rows, cols
        return cls(Cell(r2, c1), Cell(r1, c1), Cell(r1, c2), Cell(r2, c2))

    def cells(self) -> Writing:
        return (self.a, self.b, self.c, self.d)


def writings_of(q: Quadrangle) -> list[Writing]:
    """The 8 writings of ``q``, sorted: 4 choices of d, 2 orders of (a, c)."""
    corners = q.cells()
    out = set()
    for d in corners:
        b = next(x for x in corners if x.row != d.row and x.col != d.col)
        a, c = (x for x in corners if x not in (b, d))
        out.add((a, b, c, d))
        out.add((c, b, a, d))
    return sorted(out)


def canonical_writing(q: Quadrangle) -> Writing:
    return writings_of(q)[0]


def orientation(w: Writing) -> str:
    """'col' if the first corner shares a column with the second, else 'row'."""
    return "col" if w[0].col == w[1].col else "row"


def block_writings(n: int) -> Iterator[Writing]:
    for r1, r2 in itertools.combinations(range(n), 2):
        for c1, c2 in itertools.combinations(range(n), 2):
            yield from writings_of(Quadrangle.from_block((r1, r2), (c1, c2)))


def writings_through(n: int, d: Cell) -> Iterator[Writing]:
    """Writings with ``d`` in position 4, scanned row-major over the opposite corner."""
    r, c = d
    for r2 in range(n):
        if r2 == r:
            continue
        for c2 in range(n):
            if c2 == c:
                continue
            b = Cell(r2, c2)
            yield (Cell(r2, c), b, Cell(r, c2), Cell(r, c))
            yield (Cell(r, c2), b, Cell(r2, c), Cell(r, c))


# -- verdicts ---------------------------------------------------------------

@dataclass(frozen=True)
class CheckVerdict:
    passed: bool
    witness: Any = None
    message: str = ""

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        d: dict = {"pass": self.passed}
        if not self.passed:
            d["witness"] = _jsonable(self.witness)
            d["message"] = self.message
        return d


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# -- checks -----------------------------------------------------------------

def is_latin(m: AnyMatrix) -> CheckVerdict:
    """Partial-Latin test: no value twice in a row or column among filled cells."""
    rows = _rows(m)
    n = len(rows)
    for i in range(n):
        seen: dict[int, Cell] = {}
        for j in range(len(rows[i])):
            v = rows[i][j]
            if v is None:
                continue
            if v in seen:
                return CheckVerdict(False, {"duplicate": [seen[v], Cell(i, j)]},
                                    f"value {v} repeated in row {i}")
            seen[v] = Cell(i, j)
    for j in range(len(rows[0]) if rows else 0):
        seen = {}
        for i in range(n):
            v = rows[i][j]
            if v is None:
                continue
            if v in seen:
                return CheckVerdict(False, {"duplicate": [seen[v], Cell(i, j)]},
                                    f"value {v} repeated in column {j}")
            seen[v] = Cell(i, j)
    return CheckVerdict(True)


def check_quadrangle_criterion(m: AnyMatrix) -> CheckVerdict:
    """Direct O(n^4) check over every writing of every quadrangle.

    Each writing is keyed by (orientation, first three values); each key must
    determine a unique fourth value.  Non-square inputs with a single row or
    column pass vacuously.
    """
    rows = _rows(m)
    if any(v is None for r in rows for v in r):
        raise ValueError("matrix has holes; a full matrix is required")
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    seen: dict[tuple, Writing] = {}
    for r1, r2 in itertools.combinations(range(n_rows), 2):
        for c1, c2 in itertools.combinations(range(n_cols), 2):
            for w in writings_of(Quadrangle.from_block((r1, r2), (c1, c2))):
                a, b, c, d = (rows[x.row][x.col] for x in w)
                key = (orientation(w), a, b, c)
                prev = seen.setdefault(key, w)
                if rows[prev[3].row][prev[3].col] != d:
                    return CheckVerdict(False, {"quadrangles": [list(prev), list(w)]},
                                        f"writings agree on {key[1:]} but differ in position 4")
    return CheckVerdict(True)


def _bordered_op(rows, headline: Sequence[int], sideline: Sequence[int]):
    """Operation x*y = m[i][j] where sideline[i] = x and headline[j] = y."""
    n = len(rows)
    row_of = {x: i for i, x in enumerate(sideline)}
    col_of = {y: j for j, y in enumerate(headline)}
    if len(row_of) != n or len(col_of) != n:
        return None
    return tuple(tuple(rows[row_of[x]][col_of[y]] for y in range(n)) for x in range(n))


def _find_identity(op) -> Optional[int]:
    n = len(op)
    for e in range(n):
        if all(op[e][x] == x and op[x][e] == x for x in range(n)):
            return e
    return None


def is_cayley(m: AnyMatrix) -> CheckVerdict:
    """Latin, and bordering by row 0 and column 0 gives a group.  O(n^3)."""
    rows = _full_rows(m)
    latin = is_latin(rows)
    if not latin:
        return latin
    if any(not 0 <= v < len(rows) for r in rows for v in r):
        return CheckVerdict(False, {"values": "outside range(n)"}, "values must lie in range(n)")
    op = _bordered_op(rows, rows[0], [r[0] for r in rows])
    verdict = verify_group(op, rows[0][0])
    if not verdict:
        return CheckVerdict(False, {"axiom": verdict.axiom, "elements": list(verdict.witness or ())},
                            "bordered operation: " + verdict.message)
    return CheckVerdict(True)


def is_balanced_cayley(m: AnyMatrix) -> CheckVerdict:
    """Some k has row k equal to column k and that bordering is a group."""
    rows = _full_rows(m)
    latin = is_latin(rows)
    if not latin:
        return latin
    n = len(rows)
    if any(not 0 <= v < n for r in rows for v in r):
        return CheckVerdict(False, {"values": "outside range(n)"}, "values must lie in range(n)")
    for k in range(n):
        line = rows[k]
        if tuple(r[k] for r in rows) != line:
            continue
        op = _bordered_op(rows, line, line)
        if verify_group(op, rows[k][k]):
            return CheckVerdict(True, None, f"k={k}")
    return CheckVerdict(False, {"checked_k": list(range(n))},
                        "no index k gives a balanced group bordering")


# -- constructions ----------------------------------------------------------

def punch(m: CayleyMatrix, holes: Iterable[tuple[int, int]]) -> PartialMatrix:
    n = m.n
    holes = {Cell(*h) for h in holes}
    for h in holes:
        if not (0 <= h.row < n and 0 <= h.col < n):
            raise ValueError(f"hole {tuple(h)} outside a {n}x{n} grid")
    cells = [[None if (i, j) in holes else m.values[i][j] for j in range(n)] for i in range(n)]
    return PartialMatrix(cells, m.universe)


@dataclass(frozen=True)
class CayleyTable:
    matrix: CayleyMatrix
    headline: tuple[int, ...]
    sideline: tuple[int, ...]

    def operation(self) -> GroupTable:
        """The induced group on the universe: x*y = m[i][j] for sideline[i]=x, headline[j]=y."""
        op = _bordered_op(self.matrix.values, self.headline, self.sideline)
        e = _find_identity(op)
        return GroupTable(len(op), op, e, "bordered", self.matrix.universe)

    @property
    def identity(self) -> int:
        return self.operation().identity


def border(m: CayleyMatrix, headline_row: int = 0, sideline_col: int = 0) -> CayleyTable:
    if not is_cayley(m):
        raise ValueError("matrix is not a Cayley matrix; bordering does not give a group")
    rows = m.values
    return CayleyTable(m, tuple(rows[headline_row]), tuple(r[sideline_col] for r in rows))


def is_group_table(rows: Sequence[Sequence[int]], headline: Sequence[int],
                   sideline: Sequence[int]) -> CheckVerdict:
    """Does the labelled matrix define a group operation on its universe?"""
    rows = _full_rows(rows)
    op = _bordered_op(rows, headline, sideline)
    if op is None:
        return CheckVerdict(False, {"labels": "not permutations"},
                            "headline and sideline must be permutations")
    e = _find_identity(op)
    if e is None:
        return CheckVerdict(False, {"axiom": "identity"}, "labelled operation has no identity")
    verdict = verify_group(op, e)
    if not verdict:
        return CheckVerdict(False, {"axiom": verdict.axiom, "elements": list(verdict.witness or ())},
                            verdict.message)
    return CheckVerdict(True)


def random_latin_square(n: int, rng: random.Random) -> CayleyMatrix:
    """A random Latin square by randomized backtracking (not uniform)."""
    grid = [[None] * n for _ in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]

    def fill(k):
        if k == n * n:
            return True
        i, j = divmod(k, n)
        choices = [v for v in range(n) if v not in row_used[i] and v not in col_used[j]]
        rng.shuffle(choices)
        for v in choices:
            grid[i][j] = v
            row_used[i].add(v)
            col_used[j].add(v)
            if fill(k + 1):
                return True
            row_used[i].discard(v)
            col_used[j].discard(v)
        grid[i][j] = None
        return False

    fill(0)
    return CayleyMatrix(grid)


# -- text format ------------------------------------------------------------

class GridParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


HOLE = "."


def parse_grid(text: str, source: str = "<input>") -> PartialMatrix:
    """Parse the grid format.

    Optional ``n=<int>`` and ``symbols=<name> <name> ...`` header lines,
    then one line per row of space-separated names, ``.`` for a hole.
    ``#`` starts a comment.  Without a symbols line the universe is
    ``0 .. n-1``.
    """
    n: Optional[int] = None
    symbols: Optional[list[str]] = None
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if rows or n is not None:
                raise GridParseError("unexpected n= header", lineno, source)
            try:
                n = int(line[2:])
            except ValueError:
                raise GridParseError(f"bad order {line[2:]!r}", lineno, source) from None
            if n < 1:
                raise GridParseError(f"order must be positive, got {n}", lineno, source)
            continue
        if line.startswith("symbols="):
            if rows or symbols is not None:
                raise GridParseError("unexpected symbols= header", lineno, source)
            symbols = line[len("symbols="):].split()
            if len(set(symbols)) != len(symbols) or HOLE in symbols:
                raise GridParseError("symbols must be distinct and not '.'", lineno, source)
            continue
        rows.append((lineno, line.split()))

    if n is None:
        n = len(rows)
        if n == 0:
            raise GridParseError("empty grid", None, source)
    if symbols is None:
        symbols = [str(i) for i in range(n)]
    elif len(symbols) != n:
        raise GridParseError(f"{len(symbols)} symbols declared for order {n}", None, source)
    index = {s: i for i, s in enumerate(symbols)}

    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else None
        raise GridParseError(f"expected {n} rows, found {len(rows)}", where, source)
    cells = []
    for r, (lineno, tokens) in enumerate(rows):
        if len(tokens) != n:
            raise GridParseError(f"row {r} has {len(tokens)} of {n} entries", lineno, source)
        out = []
        for c, tok in enumerate(tokens):
            if tok == HOLE:
                out.append(None)
            elif tok in index:
                out.append(index[tok])
            else:
                raise GridParseError(f"symbol {tok!r} at column {c} is not in the universe",
                                     lineno, source)
        cells.append(out)
    return PartialMatrix(cells, tuple(symbols))


def serialize_grid(m: Union[PartialMatrix, CayleyMatrix]) -> str:
    rows = _rows(m)
    universe = m.universe
    lines = [f"n={len(rows)}"]
    if tuple(universe) != _default_universe(len(rows)):
        lines.append("symbols=" + " ".join(universe))
    for row in rows:
        lines.append(" ".join(HOLE if v is None else universe[v] for v in row))
    return "\n".join(lines) + "\n"
