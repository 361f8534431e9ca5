"""Finite groups as explicit operation tables.

Elements of an order-n group are the integers ``0 .. n-1``; display names are
for presentation only.  The catalog is closed: cyclic, dihedral, symmetric
(k <= 4), the quaternion group and direct products of those.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Table = tuple[tuple[int, ...], ...]
Pair = tuple[int, int]


class GroupSpecError(ValueError):
    """Unsupported or malformed group family descriptor."""


class TheoremViolation(AssertionError):
    """Raised in strict mode when an exhaustive search contradicts a proven bound."""


@dataclass(frozen=True)
class Element:
    index: int
    display_name: str


@dataclass(frozen=True)
class GroupTable:
    order: int
    op: Table
    identity: int
    name: str
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(self.order)))

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(i, s) for i, s in enumerate(self.names))

    def mul(self, x: int, y: int) -> int:
        return self.op[x][y]

    def inverse(self, x: int) -> int:
        return self.op[x].index(self.identity)

    def __str__(self):
        return self.name


# -- verification -----------------------------------------------------------

@dataclass(frozen=True)
class GroupVerdict:
    passed: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None
    message: str = ""

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        d: dict = {"pass": self.passed}
        if not self.passed:
            d["witness"] = {"axiom": self.axiom, "cells": list(self.witness or ()),
                            "message": self.message}
        return d


def verify_group(op: Sequence[Sequence[int]], identity: int) -> GroupVerdict:
    """Check the group axioms on an explicit table, reporting the first failure.

    Axioms are checked in the order shape, latin, identity, associativity,
    inverse.  ``witness`` holds the offending cells (latin) or elements.
    """
    n = len(op)
    for i, row in enumerate(op):
        if len(row) != n:
            return GroupVerdict(False, "shape", (i,), f"row {i} has {len(row)} of {n} entries")
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                return GroupVerdict(False, "shape", (i, j), f"entry ({i},{j}) = {v!r} outside [0,{n})")
    if not 0 <= identity < n:
        return GroupVerdict(False, "identity", (identity,), f"identity {identity} outside [0,{n})")

    for i in range(n):
        seen: dict[int, int] = {}
        for j in range(n):
            v = op[i][j]
            if v in seen:
                return GroupVerdict(False, "latin", ((i, seen[v]), (i, j)),
                                    f"value {v} repeated in row {i}")
            seen[v] = j
    for j in range(n):
        seen = {}
        for i in range(n):
            v = op[i][j]
            if v in seen:
                return GroupVerdict(False, "latin", ((seen[v], j), (i, j)),
                                    f"value {v} repeated in column {j}")
            seen[v] = i

    e = identity
    for x in range(n):
        if op[e][x] != x:
            return GroupVerdict(False, "identity", (e, x), f"op[{e}][{x}] = {op[e][x]} != {x}")
        if op[x][e] != x:
            return GroupVerdict(False, "identity", (x, e), f"op[{x}][{e}] = {op[x][e]} != {x}")

    for x, y, z in itertools.product(range(n), repeat=3):
        if op[op[x][y]][z] != op[x][op[y][z]]:
            return GroupVerdict(False, "associativity", (x, y, z),
                                f"({x}*{y})*{z} != {x}*({y}*{z})")

    for x in range(n):
        if e not in op[x]:
            return GroupVerdict(False, "inverse", (x,), f"{x} has no right inverse")
    return GroupVerdict(True)


# -- catalog ----------------------------------------------------------------

def _build(op: Sequence[Sequence[int]], identity: int, name: str,
           names: Iterable[str] = ()) -> GroupTable:
    table = tuple(tuple(r) for r in op)
    verdict = verify_group(table, identity)
    if not verdict:
        raise GroupSpecError(f"{name}: construction is not a group ({verdict.message})")
    return GroupTable(len(table), table, identity, name, tuple(names))


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupSpecError(f"cyclic group needs n >= 1, got {n}")
    return _build([[(i + j) % n for j in range(n)] for i in range(n)], 0, f"C{n}")


def dihedral(k: int) -> GroupTable:
    """Symmetries of a k-gon, order 2k; element r^i s^f has index i + k*f."""
    if k < 2:
        raise GroupSpecError(f"dihedral group needs k >= 2, got {k}")

    def mul(x, y):
        i, f = x % k, x // k
        j, g = y % k, y // k
        return (i + (j if f == 0 else -j)) % k + k * ((f + g) % 2)

    n = 2 * k
    names = [("r%d" % i if i else "e") if f == 0 else ("s" if i == 0 else "r%ds" % i)
             for f in (0, 1) for i in range(k)]
    return _build([[mul(x, y) for y in range(n)] for x in range(n)], 0, f"D{k}", names)


def symmetric(k: int) -> GroupTable:
    """Permutations of k points in lexicographic order; (p*q)(x) = p(q(x))."""
    if not 1 <= k <= 4:
        raise GroupSpecError(f"symmetric group supported for 1 <= k <= 4, got {k}")
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    op = [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]
    names = ["".join(str(v) for v in p) for p in perms]
    return _build(op, 0, f"S{k}", names)


_QUNITS = "1ijk"
# unit products: (sign, unit) for u*v
_QMUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> GroupTable:
    elems = [(s, u) for u in _QUNITS for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    op = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = _QMUL[u1, u2]
            row.append(index[(s * s1 * s2, u)])
        op.append(row)
    names = [("" if s > 0 else "-") + u for s, u in elems]
    return _build(op, 0, "Q8", names)


def product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Direct product; the pair (x, y) has index x * |b| + y."""
    m = b.order
    n = a.order * m
    op = [[a.op[x // m][y // m] * m + b.op[x % m][y % m] for y in range(n)] for x in range(n)]
    names = [f"({a.names[x // m]},{b.names[x % m]})" for x in range(n)]
    return _build(op, a.identity * m + b.identity, f"{a.name}x{b.name}", names)


_ATOM = re.compile(r"(c|d|s)(\d+)|(q8)")


def _parse(text: str, pos: int) -> tuple[GroupTable, int]:
    if text.startswith("prod:", pos):
        left, pos = _parse(text, pos + 5)
        if not text.startswith(",", pos):
            raise GroupSpecError(f"expected ',' at position {pos} in {text!r}")
        right, pos = _parse(text, pos + 1)
        return product(left, right), pos
    m = _ATOM.match(text, pos)
    if not m:
        raise GroupSpecError(f"unsupported group spec at position {pos} in {text!r}; "
                             "expected c<n>, d<k>, s<k>, q8 or prod:<spec>,<spec>")
    if m.group(3):
        return quaternion8(), m.end()
    family, arg = m.group(1), int(m.group(2))
    return {"c": cyclic, "d": dihedral, "s": symmetric}[family](arg), m.end()


def make_group(spec: str) -> GroupTable:
    """Build a catalog group from a descriptor such as ``c5``, ``d4`` or ``prod:c2,c4``."""
    text = spec.strip().lower()
    group, pos = _parse(text, 0)
    if pos != len(text):
        raise GroupSpecError(f"trailing input at position {pos} in {spec!r}")
    return group


CATALOG = {
    "C4": "c4", "C2xC2": "prod:c2,c2", "C5": "c5", "C6": "c6", "S3": "s3",
    "C7": "c7", "C8": "c8", "C2xC4": "prod:c2,c4", "C2xC2xC2": "prod:c2,prod:c2,c2",
    "D4": "d4", "Q8": "q8",
}
"""The groups of order 4..8 exercised by the reconstruction sweeps."""


# -- Cayley matrices --------------------------------------------------------

def _check_enumeration(perm: Sequence[int], n: int, what: str) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{what} enumeration {perm} is not a permutation of range({n})")
    return perm


def cayley_matrix_of(G: GroupTable, rows: Optional[Sequence[int]] = None,
                     cols: Optional[Sequence[int]] = None):
    """The matrix m[i][j] = rows[i] * cols[j]; enumerations default to 0..n-1."""
    from .tables import CayleyMatrix

    n = G.order
    rows = _check_enumeration(range(n) if rows is None else rows, n, "row")
    cols = _check_enumeration(range(n) if cols is None else cols, n, "column")
    values = tuple(tuple(G.op[g][h] for h in cols) for g in rows)
    return CayleyMatrix(values, G.names)


# -- group-theoretic witnesses ----------------------------------------------

@dataclass(frozen=True)
class Prop3Witness:
    """Two 2x2 blocks with equal products: rows (g1, g2) x cols (h1, h2) and
    rows (g1p, g2p) x cols (h1p, h2p)."""
    g2: int
    h2: int
    g1p: int
    g2p: int
    h1p: int
    h2p: int


def prop3_cells(pivot: Pair, w: Prop3Witness) -> tuple[list[Pair], list[Pair]]:
    g1, h1 = pivot
    first = [(g, h) for g in (g1, w.g2) for h in (h1, w.h2)]
    second = [(g, h) for g in (w.g1p, w.g2p) for h in (w.h1p, w.h2p)]
    return first, second


def validate_prop3_witness(G: GroupTable, T: Iterable[Pair], pivot: Pair,
                           w: Prop3Witness) -> bool:
    """Check conditions (i)-(iii) directly, without reusing the search.

    The second block must avoid T entirely; the first block may meet T only in
    the pivot.  (Letting the second block touch T would admit the trivial
    witness where both blocks coincide.)
    """
    T = set(T)
    g1, h1 = pivot
    if g1 == w.g2 or h1 == w.h2 or w.g1p == w.g2p or w.h1p == w.h2p:
        return False
    gs, hs = (g1, w.g2), (h1, w.h2)
    gps, hps = (w.g1p, w.g2p), (w.h1p, w.h2p)
    for i in range(2):
        for j in range(2):
            if G.op[gs[i]][hs[j]] != G.op[gps[i]][hps[j]]:
                return False
    first, second = prop3_cells(pivot, w)
    if any(c in T for c in second):
        return False
    return {c for c in first if c in T} == {pivot}


def prop3_witness(G: GroupTable, T: Iterable[Pair], pivot: Pair,
                  strict: bool = False) -> Optional[Prop3Witness]:
    """Search (g2, h2, g1') lexicographically for a witness; None if none exists.

    With ``strict`` set, a failed search for n > 3 raises TheoremViolation.
    """
    T = set(T)
    n = G.order
    if pivot not in T:
        raise ValueError(f"pivot {pivot} is not in T")
    if len(T) > n - 1:
        raise ValueError(f"|T| = {len(T)} exceeds n - 1 = {n - 1}")
    op, inv = G.op, [G.inverse(x) for x in range(n)]
    g1, h1 = pivot
    for g2, h2, g1p in itertools.product(range(n), repeat=3):
        if g2 == g1 or h2 == h1:
            continue
        if (g2, h1) in T or (g1, h2) in T or (g2, h2) in T:
            continue
        # the remaining three are forced by g_i h_j = g_i' h_j'
        h1p = op[inv[g1p]][op[g1][h1]]
        g2p = op[op[g2][h1]][inv[h1p]]
        h2p = op[inv[g1p]][op[g1][h2]]
        cells = [(g1p, h1p), (g1p, h2p), (g2p, h1p), (g2p, h2p)]
        if any(c in T for c in cells):
            continue
        if op[g2p][h2p] != op[g2][h2]:
            continue
        return Prop3Witness(g2, h2, g1p, g2p, h1p, h2p)
    if strict and n > 3:
        raise TheoremViolation(f"no witness in {G.name} for T={sorted(T)}, pivot={pivot}")
    return None
