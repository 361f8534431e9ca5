"""Brute-force completion: the ground truth for uniqueness questions.

Depth-first over holes in row-major order, values ascending, pruning only on
partial-Latin violations.  Full candidates are handed to the independent
checkers in ``tables``.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .reconstructor import saturate
from .tables import (Cell, CayleyMatrix, PartialMatrix, is_balanced_cayley, is_cayley,
                     is_group_table, punch, serialize_grid)

DEFAULT_BUDGET = 10 ** 7
MODES = ("latin", "cayley", "balanced_cayley", "labeled_table")


@dataclass(frozen=True)
class CompletionQuery:
    partial: PartialMatrix
    mode: str = "cayley"
    limit: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    headline: Optional[Sequence[int]] = None
    sideline: Optional[Sequence[int]] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.mode == "labeled_table":
            n = self.partial.n
            for name, line in (("headline", self.headline), ("sideline", self.sideline)):
                if line is None or sorted(line) != list(range(n)):
                    raise ValueError(f"labeled_table mode needs a {name} permuting range({n})")


@dataclass
class CompletionSet:
    completions: list[CayleyMatrix]
    exhausted: bool
    truncated: bool = False
    nodes: int = 0

    def __len__(self):
        return len(self.completions)

    @property
    def unique(self) -> bool:
        return self.exhausted and not self.truncated and len(self.completions) == 1


def _accepts(q: CompletionQuery, m: CayleyMatrix) -> bool:
    if q.mode == "latin":
        return True
    if q.mode == "cayley":
        return bool(is_cayley(m))
    if q.mode == "balanced_cayley":
        return bool(is_balanced_cayley(m))
    return bool(is_group_table(m.values, q.headline, q.sideline))


def complete_all(q: CompletionQuery) -> CompletionSet:
    p = q.partial
    n = p.n
    k = len(p.universe)
    grid = [list(r) for r in p.cells]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = grid[i][j]
            if v is None:
                continue
            if v in row_used[i] or v in col_used[j]:
                return CompletionSet([], True)
            row_used[i].add(v)
            col_used[j].add(v)
    holes = p.holes
    out: list[CayleyMatrix] = []
    nodes = 0
    state = {"exhausted": True, "truncated": False}

    def dfs(h: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > q.budget:
            state["exhausted"] = False
            return False
        if h == len(holes):
            m = CayleyMatrix(grid, p.universe)
            if _accepts(q, m):
                if q.limit is not None and len(out) >= q.limit:
                    state["truncated"] = True
                    return False
                out.append(m)
            return True
        i, j = holes[h]
        for v in range(k):
            if v in row_used[i] or v in col_used[j]:
                continue
            grid[i][j] = v
            row_used[i].add(v)
            col_used[j].add(v)
            go_on = dfs(h + 1)
            row_used[i].discard(v)
            col_used[j].discard(v)
            grid[i][j] = None
            if not go_on:
                return False
        return True

    dfs(0)
    return CompletionSet(out, state["exhausted"], state["truncated"], nodes)


def count_completions(partial: PartialMatrix, mode: str = "cayley",
                      budget: int = DEFAULT_BUDGET, **labels) -> tuple[int, bool]:
    res = complete_all(CompletionQuery(partial, mode, None, budget, **labels))
    return len(res), res.exhausted


def serialize_completions(cs: CompletionSet) -> str:
    head = f"count={len(cs)} exhausted={str(cs.exhausted).lower()}"
    if cs.truncated:
        head += " truncated=true"
    return "\n".join([head + "\n"] + [serialize_grid(m) for m in cs.completions])


# -- stuck configurations ---------------------------------------------------

@dataclass
class StuckScan:
    hole_sets: list[frozenset]
    exhaustive: bool
    examined: int


def stalls(m: CayleyMatrix, holes) -> bool:
    """True if saturating quadrangle fills leaves some hole open."""
    grid, _ = saturate(punch(m, holes))
    return not grid.is_full


def find_stuck_hole_sets(m: CayleyMatrix, k: int, budget: Optional[int] = None,
                         samples: Optional[int] = None, seed: int = 0) -> StuckScan:
    """Hole sets of size k on which no fill order completes the matrix.

    Enumerates all k-subsets of cells (at most ``budget`` of them), or draws
    ``samples`` random subsets with the given seed.  Saturation fills are sound
    and only add information, so a stall means every order fails.
    """
    n = m.n
    cells = [Cell(i, j) for i in range(n) for j in range(n)]
    if not 0 <= k <= len(cells):
        raise ValueError(f"k must be in [0, {len(cells)}]")
    if samples is not None:
        rng = random.Random(seed)
        seen: set[frozenset] = set()
        found = []
        for _ in range(samples):
            hs = frozenset(rng.sample(cells, k))
            if hs in seen:
                continue
            seen.add(hs)
            if stalls(m, hs):
                found.append(hs)
        total = math.comb(len(cells), k)
        return StuckScan(found, len(seen) == total, samples)

    found = []
    examined = 0
    for combo in itertools.combinations(cells, k):
        if budget is not None and examined >= budget:
            return StuckScan(found, False, examined)
        examined += 1
        if stalls(m, combo):
            found.append(frozenset(combo))
    return StuckScan(found, True, examined)
