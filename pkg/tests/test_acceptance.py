"""Acceptance gate: one test per shipped guarantee, with a recorded verdict.

Each test prints one line into the terminal summary (see conftest) so a full
run ends with a pass/fail ledger of every guarantee, including the measured
runtimes where a guarantee carries a time budget.
"""

import itertools
import math
import random
import time

from conftest import record_acceptance

from btdist import cli
from btdist.distance import (
    distance_distribution,
    distance_table,
    exact_diameter,
    exact_distance,
    pair_distance,
    sort_permutation,
    verify_word,
)
from btdist.moves import evaluate_witness, three_bond_witness, witness_oracle
from btdist.perm_core import Permutation, inverse, linear_bonds, parse_permutation
from btdist.suites import criteria_suite, metric_suite, shifting_suite
from btdist.toric import toric_map

EIGHT_MEMBER_CLASS = {
    (4, 1, 6, 2, 5, 7, 3),
    (4, 1, 5, 2, 7, 3, 6),
    (4, 7, 1, 5, 2, 6, 3),
    (2, 6, 3, 7, 4, 1, 5),
    (5, 2, 6, 1, 3, 7, 4),
    (5, 1, 6, 3, 7, 2, 4),
    (3, 5, 1, 6, 2, 7, 4),
    (5, 1, 4, 6, 2, 7, 3),
}


def _verdict(num: int, ok: bool, detail: str) -> None:
    record_acceptance(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num}: {detail}"


def _shuffled(rng: random.Random, n: int) -> Permutation:
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return Permutation(tuple(vals))


def _bondless(rng: random.Random, n: int) -> Permutation:
    while True:
        p = _shuffled(rng, n)
        if not int(linear_bonds(p)) and not p.is_reverse():
            return p


def test_criterion_01_diameters():
    start = time.perf_counter()
    small = [exact_diameter(n) for n in range(3, 9)]
    t_small = time.perf_counter() - start
    start = time.perf_counter()
    nine = exact_diameter(9)
    t_nine = time.perf_counter() - start
    start = time.perf_counter()
    ten = exact_diameter(10)
    t_ten = time.perf_counter() - start
    got = small + [nine]
    expected = [math.ceil((n + 1) / 2) for n in range(3, 10)]
    ok = (
        got == expected == [2, 3, 3, 4, 4, 5, 5]
        and ten == 6
        and t_small < 10
        and t_nine < 300
        and t_ten < 1800
    )
    _verdict(
        1,
        ok,
        f"diameters 3..10 = {got + [ten]};"
        f" n<=8 in {t_small:.1f}s, n=9 in {t_nine:.1f}s, n=10 in {t_ten:.1f}s",
    )


def test_criterion_02_shifting_identity():
    start = time.perf_counter()
    ok, detail = shifting_suite(max_n=8)
    elapsed = time.perf_counter() - start
    _verdict(2, ok and elapsed < 5, f"{detail}; {elapsed:.2f}s")


def test_criterion_03_toric_invariance():
    start = time.perf_counter()
    table = distance_table(7)
    ok, detail, checked = True, "", 0
    for vals in itertools.permutations(range(1, 8)):
        p = Permutation(vals)
        d = table.distance_of(p)
        for r in range(8):
            if table.distance_of(toric_map(p, r)) != d:
                ok, detail = False, f"r={r} changes the distance of {vals}"
                break
            checked += 1
        if not ok:
            break
    elapsed = time.perf_counter() - start
    if ok:
        detail = f"{checked} images over Sym_7 x r in 0..7 keep their distance"
    _verdict(3, ok and elapsed < 120, f"{detail}; {elapsed:.1f}s")


def test_criterion_04_pair_invariance():
    # Omega_r conjugates [0 pi] and [0 nu] by the same alpha^r on the index
    # side, so those legs cancel only in the quotient pi . nu^-1; that pair
    # distance is the invariant one, and it is pair_distance on the inverses.
    rng = random.Random(404)
    start = time.perf_counter()
    distance_table(6)
    ok, detail = True, ""
    for _ in range(10_000):
        p = _shuffled(rng, 6)
        q = _shuffled(rng, 6)
        r = rng.randrange(7)
        before = pair_distance(inverse(q), inverse(p))
        after = pair_distance(inverse(toric_map(q, r)), inverse(toric_map(p, r)))
        if before != after:
            ok, detail = False, f"r={r} changes d for {p.values} vs {q.values}"
            break
    elapsed = time.perf_counter() - start
    if ok:
        detail = "10000 random (pi, nu, r) triples at n=6 keep the pair distance"
    _verdict(4, ok and elapsed < 60, f"{detail}; {elapsed:.1f}s")


def test_criterion_05_criteria_soundness():
    start = time.perf_counter()
    ok, detail = criteria_suite(max_n=6)
    elapsed = time.perf_counter() - start
    _verdict(5, ok and elapsed < 120, f"{detail}; {elapsed:.1f}s")


def test_criterion_06_three_bond_witness():
    ok, detail, exhaustive = True, "", 0
    for n in range(2, 8):
        for vals in itertools.permutations(range(1, n + 1)):
            p = Permutation(vals)
            if int(linear_bonds(p)) or p.is_reverse():
                continue
            if evaluate_witness(three_bond_witness(p)) < 3:
                ok, detail = False, f"constructive witness below three bonds on {vals}"
                break
            if evaluate_witness(witness_oracle(p)) < 3:
                ok, detail = False, f"oracle disagrees in success on {vals}"
                break
            exhaustive += 1
        if not ok:
            break
    worst = 0.0
    if ok:
        for size in (20, 50, 100):
            rng = random.Random(size)
            for _ in range(10_000):
                p = _bondless(rng, size)
                started = time.perf_counter()
                bonds = evaluate_witness(three_bond_witness(p))
                worst = max(worst, time.perf_counter() - started)
                if bonds < 3 or worst >= 0.05:
                    ok, detail = False, f"witness slow or weak at n={size}"
                    break
            if not ok:
                break
    if ok:
        detail = (
            f"{exhaustive} exhaustive witnesses (n<=7, oracle agrees) and 10000 random"
            f" at each n in (20, 50, 100); worst {worst * 1000:.1f} ms"
        )
    _verdict(6, ok, detail)


def test_criterion_07_constructive_sorting():
    ok, detail = True, ""
    total = uncertified = 0
    for size in (20, 40, 60):
        rng = random.Random(700 + size)
        bound = (2 * size - 2) // 3
        for _ in range(1000):
            p = _shuffled(rng, size)
            sw = sort_permutation(p)
            if not verify_word(p, sw.word):
                ok, detail = False, f"word fails to sort at n={size}"
                break
            if sw.certified_bound is None:
                uncertified += 1
            elif sw.certified_bound != bound or len(sw.word) > bound:
                ok, detail = False, f"bound breach at n={size}"
                break
            total += 1
        if not ok:
            break
    small_checked = 0
    if ok:
        rng = random.Random(79)
        for n in range(3, 10):
            for _ in range(200):
                p = _shuffled(rng, n)
                if len(sort_permutation(p).word) < exact_distance(p):
                    ok, detail = False, f"sorted below the exact distance at n={n}"
                    break
                small_checked += 1
            if not ok:
                break
    rate = uncertified / total if total else 0.0
    if ok and rate >= 0.01:
        ok, detail = False, f"uncertified rate {rate:.2%} exceeds 1%"
    if ok:
        detail = (
            f"{total} words verified at n in (20, 40, 60), {uncertified} uncertified"
            f" ({rate:.2%}); {small_checked} small-n words reach the exact distance"
        )
    _verdict(7, ok, detail)


def test_criterion_08_metric_axioms():
    ok, detail = metric_suite(max_n=7)
    _verdict(8, ok, detail)


def test_criterion_09_distribution_sanity():
    ok, detail = True, ""
    for n in range(3, 9):
        hist = distance_distribution(n)
        if sum(hist.values()) != math.factorial(n):
            ok, detail = False, f"histogram misses permutations at n={n}"
            break
        if max(hist) != exact_diameter(n) or any(d > n - 1 for d in hist):
            ok, detail = False, f"histogram support broken at n={n}"
            break
    if ok:
        detail = "histograms for n=3..8 total n!, peak at the diameter, stay below n"
    _verdict(9, ok, detail)


def test_criterion_10_eight_member_class(capsys):
    code = cli.run(["toric", "4 1 6 2 5 7 3"])
    out = capsys.readouterr().out
    members = {parse_permutation(line).values for line in out.splitlines()}
    ok = code == 0 and members == EIGHT_MEMBER_CLASS and len(out.splitlines()) == 8
    _verdict(10, ok, "toric command emits exactly the known 8-member class at n=7")
