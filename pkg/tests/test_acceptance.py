"""Exit criteria, one test each.  A pass/fail line per criterion is printed in
the terminal summary (``pytest tests/test_acceptance.py``)."""
import functools
import itertools
import random
import time

import pytest

from instances import (ACCEPTANCE_LINES, C3_STUCK_HOLES, C4_AWKWARD_HOLES, CORNER_ONLY,
                       CYCLIC_SKEW, CYCLIC_SYMMETRIC, FIRST_ROW_ONLY, LABELED_HEADLINE,
                       LABELED_SIDELINE, REVERSED_SYMMETRIC)
from quadrecon.algebra import (CATALOG, cayley_matrix_of, make_group, prop3_witness,
                               validate_prop3_witness)
from quadrecon.oracle import CompletionQuery, complete_all, find_stuck_hole_sets
from quadrecon.reconstructor import Status, analyze_hole, reconstruct
from quadrecon.tables import (check_quadrangle_criterion, is_cayley, punch,
                              random_latin_square)

TRIALS = 200
ORDERS_PER_TRIAL = 5


def criterion(number, title):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException:
                line = f"AC{number:<2} FAIL  {title}"
                ACCEPTANCE_LINES.append(line)
                print(line)
                raise
            line = f"AC{number:<2} PASS  {title}" + (f"  [{detail}]" if detail else "")
            ACCEPTANCE_LINES.append(line)
            print(line)
        return wrapper
    return deco


@pytest.fixture(scope="module")
def groups():
    return {name: cayley_matrix_of(make_group(spec)) for name, spec in CATALOG.items()}


@pytest.fixture(scope="module")
def theorem_trials(groups):
    """name -> list of (holes, [orders]) drawn with a per-group seed."""
    out = {}
    for name, m in groups.items():
        n = m.n
        rng = random.Random(f"theorem-{name}")
        cells = list(itertools.product(range(n), repeat=2))
        trials = []
        for _ in range(TRIALS):
            holes = rng.sample(cells, rng.randint(1, n - 1))
            orders = []
            for _ in range(ORDERS_PER_TRIAL):
                o = holes[:]
                rng.shuffle(o)
                orders.append(o)
            trials.append((holes, orders))
        out[name] = trials
    return out


@criterion(1, "reconstruction sweep: <= n-1 holes, any order, n = 4..8")
def test_ac1_theorem(groups, theorem_trials):
    start = time.perf_counter()
    runs = 0
    for name, m in groups.items():
        for holes, orders in theorem_trials[name]:
            p = punch(m, holes)
            for order in orders:
                rep = reconstruct(p, order, mode="quadrangle_only")
                assert rep.status is Status.COMPLETE, (name, holes, order, rep.at)
                assert rep.grid.to_matrix() == m
                runs += 1
    elapsed = time.perf_counter() - start
    assert runs == len(groups) * TRIALS * ORDERS_PER_TRIAL
    assert elapsed < 60
    return f"{runs} runs, 100% complete, {elapsed:.1f}s"


@criterion(2, "n = 3: C3 with two holes is stuck, oracle still unique")
def test_ac2_c3():
    m = cayley_matrix_of(make_group("c3"))
    p = punch(m, C3_STUCK_HOLES)
    rep = reconstruct(p, mode="quadrangle_only")
    assert rep.status is Status.STUCK and rep.fills == []
    cs = complete_all(CompletionQuery(p, "cayley"))
    assert cs.exhausted and len(cs) == 1 and cs.completions[0] == m


@criterion(3, "n = 4: C4 example completes in all 6 orders; count_c1c2c3 = 0 at (3,3)")
def test_ac3_c4():
    m = cayley_matrix_of(make_group("c4"))
    p = punch(m, C4_AWKWARD_HOLES)
    for order in itertools.permutations(C4_AWKWARD_HOLES):
        rep = reconstruct(p, order, mode="quadrangle_only")
        assert rep.status is Status.COMPLETE and rep.grid.to_matrix() == m
    assert analyze_hole(m, C4_AWKWARD_HOLES, (3, 3)).count_c1c2c3 == 0


@criterion(4, "row deletion: every full row of every catalog group is stuck, zero fills")
def test_ac4_rows(groups):
    for name, m in groups.items():
        for r in range(m.n):
            rep = reconstruct(punch(m, [(r, j) for j in range(m.n)]), mode="quadrangle_only")
            assert rep.status is Status.STUCK and rep.fills == [], (name, r)


@criterion(5, "order-3 triptych: 2 Cayley, 1 balanced, 2 balanced, 1 labeled completion")
def test_ac5_triptych():
    cay = complete_all(CompletionQuery(FIRST_ROW_ONLY, "cayley"))
    assert cay.exhausted and [c.values for c in cay.completions] == [
        CYCLIC_SYMMETRIC.values, CYCLIC_SKEW.values]
    bal = complete_all(CompletionQuery(FIRST_ROW_ONLY, "balanced_cayley"))
    assert bal.exhausted and [c.values for c in bal.completions] == [CYCLIC_SYMMETRIC.values]
    bal4 = complete_all(CompletionQuery(CORNER_ONLY, "balanced_cayley"))
    assert bal4.exhausted and sorted(c.values for c in bal4.completions) == sorted(
        [CYCLIC_SYMMETRIC.values, REVERSED_SYMMETRIC.values])
    tab = complete_all(CompletionQuery(CORNER_ONLY, "labeled_table",
                                       headline=LABELED_HEADLINE, sideline=LABELED_SIDELINE))
    assert tab.exhausted and [c.values for c in tab.completions] == [CYCLIC_SKEW.values]


@criterion(6, "(n-1)(n-3) is attained: C5 -> 8, C7 -> 24")
def test_ac6_sharp():
    for spec, expected in (("c5", 8), ("c7", 24)):
        m = cayley_matrix_of(make_group(spec))
        d = (m.n - 1, m.n - 1)
        a = analyze_hole(m, [d], d)
        assert a.count_c1c3 == expected == (m.n - 1) * (m.n - 3)


@criterion(7, "quadrangle checker agrees with bordering checker")
def test_ac7_checkers(groups):
    for m in groups.values():
        assert check_quadrangle_criterion(m) and is_cayley(m)
    rng = random.Random("ac7")
    agree = both_fail = total = 0
    for n in (5, 6, 7):
        for _ in range(40):
            m = random_latin_square(n, rng)
            a, b = bool(check_quadrangle_criterion(m)), bool(is_cayley(m))
            total += 1
            agree += a == b
            both_fail += not a and not b
    assert total >= 100 and agree == total and both_fail >= 1
    return f"{total} random squares, {both_fail} rejected by both"


@criterion(8, "group-theoretic witnesses exist for |T| <= n-1, n = 4..8")
def test_ac8_prop3():
    count = 0
    for name, spec in CATALOG.items():
        G = make_group(spec)
        n = G.order
        rng = random.Random(f"ac8-{name}")
        cells = list(itertools.product(range(n), repeat=2))
        for _ in range(100):
            T = set(rng.sample(cells, rng.randint(1, n - 1)))
            pivot = rng.choice(sorted(T))
            w = prop3_witness(G, T, pivot, strict=True)
            assert w is not None and validate_prop3_witness(G, T, pivot, w), (name, T, pivot)
            count += 1
    return f"{count} instances"


@criterion(9, "t0 + tx + ty + 1 = t for every analysed hole of suites 1-6")
def test_ac9_accounting(groups, theorem_trials):
    analyses = []
    for name, m in groups.items():
        for holes, _ in theorem_trials[name]:
            analyses += [analyze_hole(m, holes, d) for d in holes]
        for r in range(m.n):
            row = [(r, j) for j in range(m.n)]
            analyses += [analyze_hole(m, row, d) for d in row]
    c3, c4 = (cayley_matrix_of(make_group(s)) for s in ("c3", "c4"))
    analyses += [analyze_hole(c3, C3_STUCK_HOLES, d) for d in C3_STUCK_HOLES]
    analyses += [analyze_hole(c4, C4_AWKWARD_HOLES, d) for d in C4_AWKWARD_HOLES]
    for truth, partial in ((CYCLIC_SYMMETRIC, FIRST_ROW_ONLY), (CYCLIC_SKEW, CORNER_ONLY)):
        analyses += [analyze_hole(truth, partial.holes, d) for d in partial.holes]
    for spec in ("c5", "c7"):
        m = cayley_matrix_of(make_group(spec))
        d = (m.n - 1, m.n - 1)
        analyses.append(analyze_hole(m, [d], d))
    assert all(a.t0 + a.tx + a.ty + 1 == a.t for a in analyses)
    return f"{len(analyses)} analyses"


@criterion(10, "exhaustive C5, k = 4: no stuck hole set among C(25,4)")
def test_ac10_exhaustive():
    start = time.perf_counter()
    scan = find_stuck_hole_sets(cayley_matrix_of(make_group("c5")), 4)
    elapsed = time.perf_counter() - start
    assert scan.exhaustive and scan.examined == 12650 and scan.hole_sets == []
    assert elapsed < 600
    return f"{scan.examined} subsets, {elapsed:.1f}s"
