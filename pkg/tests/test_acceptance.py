"""Acceptance gate: the nine release criteria, one test each.

Run with `pytest tests/test_acceptance.py -v -s` to see one summary line per
criterion.  Criteria 3 and 7 state claims the code cannot honestly meet (the
per-object triple equality breaks at the two-node tree, and two of the
printed asymptotic estimates do not track their own counting sequences); the
corresponding tests report the measured facts and are expected to fail.
"""

import itertools
import math
import time

from mapscope.perms import (
    M,
    MeshPattern,
    P2413_VINC,
    P3142,
    avoids,
    occurrence_positions,
    occurrences,
)
from mapscope.series import B3, series
from mapscope.trees import count_trees
from mapscope.verify import (
    check_asymptotics,
    check_bounds,
    check_closure,
    check_counts,
    check_kfacefree,
    check_primitive_series,
    check_series_identities,
    check_table1,
    check_theorem5,
    naive_mesh_occurrences,
)


def _report(n: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} — {detail}", flush=True)


def _first_witness(r) -> str:
    obj, expected, got = r.witnesses[0]
    return f"{obj}: expected {expected}, got {got}"


def test_acceptance_1_counting():
    'Enumerated tree counts equal 4(3k)!/(k!(2k+2)!) for 2..10 nodes'
    t0 = time.perf_counter()
    got = [count_trees(n) for n in range(2, 11)]
    closed = [
        4 * math.factorial(3 * k) // (math.factorial(k) * math.factorial(2 * k + 2))
        for k in range(1, 10)
    ]
    frozen = [1, 2, 6, 22, 91, 408, 1938, 9614, 49335]
    cross = check_counts(9)
    elapsed = time.perf_counter() - t0
    ok = got == closed == frozen and cross.status == "pass" and elapsed < 10
    _report(1, ok, f"counts(2..10 nodes) = {got}, runtime {elapsed:.2f}s")
    assert ok


def test_acceptance_2_bijection_triangle():
    'Statistic equalities, roundtrip identity, distinct codes, <= 9 nodes'
    t0 = time.perf_counter()
    r = check_table1(9)
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and elapsed < 30
    detail = f"all trees <= 9 nodes, runtime {elapsed:.2f}s"
    if r.witnesses:
        detail = _first_witness(r)
    _report(2, ok, detail)
    assert ok


def test_acceptance_3_occurrence_triple():
    'M-occurrences = single-child-max nodes = internal 2-faces, <= 9 nodes'
    t0 = time.perf_counter()
    r = check_theorem5(9)
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and elapsed < 30
    if ok:
        detail = f"triple equal on all trees <= 9 nodes, runtime {elapsed:.2f}s"
    else:
        total = next(w[2] for w in r.witnesses if w[2].endswith("mismatches"))
        detail = f"first counterexample {_first_witness(r)}; {total} <= 9 nodes"
    _report(3, ok, detail)
    assert ok


def test_acceptance_4_primitive_enumeration():
    'Substitution identities against brute-force primitive map counts'
    t0 = time.perf_counter()
    r = check_primitive_series(10)
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and elapsed < 10
    detail = f"p_1..p_10 and both identities, runtime {elapsed:.2f}s"
    if r.witnesses:
        detail = _first_witness(r)
    _report(4, ok, detail)
    assert ok


def test_acceptance_5_series_identities():
    'Three A forms agree to order 30; B2 and B3 solutions check out'
    t0 = time.perf_counter()
    r = check_series_identities(30)
    b3 = series(B3, 11)
    printed = [1, 0, 1, 1, 5, 13, 48, 160, 578, 2078]
    b3_ok = [int(b3[n]) for n in range(1, 11)] == printed
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and b3_ok and elapsed < 5
    detail = f"order 30, B3 x^1..x^10 = {printed}, runtime {elapsed:.2f}s"
    if r.witnesses:
        detail = _first_witness(r)
    elif not b3_ok:
        detail = f"B3 prefix mismatch: {[int(b3[n]) for n in range(1, 11)]}"
    _report(5, ok, detail)
    assert ok


def test_acceptance_6_restricted_bounds():
    'Label-cap coefficients and the mef / 2-face-free sandwich'
    t0 = time.perf_counter()
    r = check_bounds(8, 12)
    k = check_kfacefree(9)
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and k.status == "pass" and elapsed < 60
    detail = f"coefficients <= 12 nodes, chain 2..8 edges, runtime {elapsed:.2f}s"
    if r.witnesses:
        detail = _first_witness(r)
    elif k.witnesses:
        detail = _first_witness(k)
    _report(6, ok, detail)
    assert ok


def test_acceptance_7_asymptotics():
    'First-order estimates and singular constants at stated tolerances'
    t0 = time.perf_counter()
    r = check_asymptotics()
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and elapsed < 30
    if ok:
        detail = f"all spot checks within tolerance, runtime {elapsed:.2f}s"
    else:
        detail = (
            f"{len(r.witnesses)} checks out of tolerance; "
            f"first: {_first_witness(r)}"
        )
    _report(7, ok, detail)
    assert ok


def test_acceptance_8_pattern_engine():
    'Quoted occurrence facts plus a full naive-matcher sweep'
    t0 = time.perf_counter()
    facts = [
        occurrence_positions(P3142, (4, 6, 2, 5, 3, 1)) == [(0, 2, 3, 4)],
        (0, 2, 3, 4) in occurrence_positions(P2413_VINC, (3, 6, 5, 2, 4, 1)),
        occurrence_positions(M, (2, 5, 3, 1, 4)) == [(2, 3)],
        avoids((3, 2, 5, 4, 1), [P3142]),
        avoids((2, 5, 3, 1, 6, 4), [P2413_VINC]),
    ]
    perms = [
        pi
        for n in range(7)
        for pi in itertools.permutations(range(1, n + 1))
    ]
    cells1 = list(itertools.product(range(2), range(2)))
    cells2 = list(itertools.product(range(3), range(3)))
    patterns = [
        ((1,), frozenset(s))
        for r in range(5)
        for s in itertools.combinations(cells1, r)
    ]
    patterns += [
        (base, frozenset(s))
        for base in ((1, 2), (2, 1))
        for r in range(10)
        for s in itertools.combinations(cells2, r)
    ]
    assert len(patterns) == 16 + 2 * 512
    sweep_ok = all(
        occurrences(MeshPattern(base, shaded), pi)
        == naive_mesh_occurrences(base, shaded, pi)
        for base, shaded in patterns
        for pi in perms
    )
    elapsed = time.perf_counter() - t0
    ok = all(facts) and sweep_ok and elapsed < 60
    detail = (
        f"5 quoted facts, {len(patterns)} patterns x {len(perms)} perms, "
        f"runtime {elapsed:.2f}s"
    )
    if not all(facts):
        detail = f"quoted facts: {facts}"
    elif not sweep_ok:
        detail = "matcher disagrees with naive reference"
    _report(8, ok, detail)
    assert ok


def test_acceptance_9_generation_closure():
    'Class generation, insertion closure, and reduction termination'
    t0 = time.perf_counter()
    r = check_closure(8)
    elapsed = time.perf_counter() - t0
    ok = r.status == "pass" and elapsed < 60
    detail = (
        f"generate = brute <= 8, closure <= 7, reduction terminates, "
        f"runtime {elapsed:.2f}s"
    )
    if r.witnesses:
        detail = _first_witness(r)
    _report(9, ok, detail)
    assert ok
