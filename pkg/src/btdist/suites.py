"""
Self-check suites behind the command line's verify subcommand.

Each suite recomputes one family of invariants from scratch and returns
(ok, detail); ok is False as soon as one case fails, and the detail line
names that case.
"""

from __future__ import annotations

import itertools
import random
import time

import numpy as np

from .distance import distance_table, eriksson_upper_bound, sort_permutation, verify_word
from .moves import (
    evaluate_witness,
    find_2move_left,
    find_2move_right,
    three_bond_witness,
    witness_oracle,
)
from .perm_core import (
    ExtendedPermutation,
    Permutation,
    circular_bonds,
    compose,
    compose_extended,
    enumerate_block_transpositions,
    extended_block_transposition,
    inverse,
    linear_bonds,
)
from .toric import alpha_power, shift_block_transposition, toric_map


def _permutations(n: int):
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)


def shifting_suite(max_n: int = 8) -> tuple[bool, str]:
    """Compose both sides of the shifting identity for every (i, j, k, r)."""
    checked = 0
    for n in range(2, max_n + 1):
        alphas = [alpha_power(n, r) for r in range(n + 1)]
        for cp in enumerate_block_transpositions(n):
            base = extended_block_transposition(cp)
            for r in range(n + 1):
                res = shift_block_transposition(cp, r)
                lhs = compose_extended(base, alphas[r])
                rhs = compose_extended(
                    alphas[res.exponent], extended_block_transposition(res.cut_points)
                )
                if lhs != rhs:
                    return False, (
                        f"shifting case {res.case_id} breaks at n={n}"
                        f" cuts={cp.as_tuple()} r={r}"
                    )
                checked += 1
    return True, f"{checked} shift identities hold through n <= {max_n}"


def toric_suite(max_n: int = 7) -> tuple[bool, str]:
    """Exact distance is constant on toric classes (table sizes only)."""
    checked = 0
    for n in range(2, min(max_n, 7) + 1):
        table = distance_table(n)
        for p in _permutations(n):
            d = table.distance_of(p)
            for r in range(1, n + 1):
                if table.distance_of(toric_map(p, r)) != d:
                    return False, f"toric map r={r} changes the distance of {p.values}"
                checked += 1
    return True, f"{checked} toric images keep their distance through n <= {min(max_n, 7)}"


def criteria_suite(max_n: int = 6) -> tuple[bool, str]:
    """Every criterion match gains at least two circular bonds."""
    matches = 0
    for n in range(2, min(max_n, 6) + 1):
        for vals in itertools.permutations(range(n + 1)):
            e = ExtendedPermutation(vals)
            before = int(circular_bonds(e))
            for ms in find_2move_right(e, all_matches=True):
                after = int(
                    circular_bonds(compose_extended(e, extended_block_transposition(ms.cut_points)))
                )
                if after < before + 2:
                    return False, f"case {ms.criterion_case} gains {after - before} on {vals}"
                matches += 1
            for ms in find_2move_left(e, all_matches=True):
                after = int(
                    circular_bonds(compose_extended(extended_block_transposition(ms.cut_points), e))
                )
                if after < before + 2:
                    return False, f"case {ms.criterion_case} gains {after - before} on {vals}"
                if ms.criterion_case in ("L-1", "L-3", "L-4") and not ms.fixes_zero:
                    return False, f"case {ms.criterion_case} must fix 0 but does not on {vals}"
                matches += 1
    return True, f"{matches} criterion matches all gain two bonds through n <= {min(max_n, 6)}"


def witness_suite(max_n: int = 7, samples: int = 10000, sample_n: int = 50, seed: int = 0) -> tuple[bool, str]:
    """Three-bond configurations, exhaustively small plus random large."""
    exhaustive = 0
    for n in range(2, min(max_n, 7) + 1):
        for p in _permutations(n):
            if int(linear_bonds(p)) or p.is_reverse():
                continue
            w = three_bond_witness(p)
            if evaluate_witness(w) < 3:
                return False, f"constructive configuration below three bonds for {p.values}"
            if n <= 6:
                witness_oracle(p)
            exhaustive += 1
    rng = random.Random(seed)
    produced = 0
    worst = 0.0
    while produced < samples:
        vals = list(range(1, sample_n + 1))
        rng.shuffle(vals)
        p = Permutation(tuple(vals))
        if int(linear_bonds(p)) or p.is_reverse():
            continue
        started = time.perf_counter()
        w = three_bond_witness(p)
        ok = evaluate_witness(w) >= 3
        worst = max(worst, time.perf_counter() - started)
        if not ok:
            return False, f"random configuration failed at n={sample_n}"
        produced += 1
    return True, (
        f"{exhaustive} exhaustive and {samples} random witnesses at n={sample_n}"
        f" verified (worst {worst * 1000:.1f} ms)"
    )


def metric_suite(max_n: int = 7) -> tuple[bool, str]:
    """Metric axioms on small tables, and d(pi) = d(pi^-1)."""
    for n in range(1, min(max_n, 5) + 1):
        table = distance_table(n)
        perms = [Permutation(v) for v in itertools.permutations(range(1, n + 1))]
        size = len(perms)
        dmat = np.zeros((size, size), dtype=np.int16)
        for b, q in enumerate(perms):
            qinv = inverse(q)
            for a, p in enumerate(perms):
                dmat[a, b] = table.distance_of(compose(qinv, p))
        if (np.diag(dmat) != 0).any() or ((dmat == 0).sum() != size):
            return False, f"identity of indiscernibles fails at n={n}"
        if (dmat != dmat.T).any():
            return False, f"symmetry fails at n={n}"
        through = np.min(dmat[:, :, None] + dmat[None, :, :], axis=1)
        if (through != dmat).any():
            return False, f"triangle inequality fails at n={n}"
    checked_inverse = 0
    for n in range(2, min(max_n, 7) + 1):
        table = distance_table(n)
        for p in _permutations(n):
            if table.distance_of(p) != table.distance_of(inverse(p)):
                return False, f"d differs from the inverse's distance at {p.values}"
            checked_inverse += 1
    return True, (
        f"axioms hold on Sym_1..Sym_{min(max_n, 5)};"
        f" {checked_inverse} inverse pairs agree through n <= {min(max_n, 7)}"
    )


def sort_suite(max_n: int = 60, count: int = 100, seed: int = 0) -> tuple[bool, str]:
    """Random sorting words verify and respect the certified bound."""
    sizes = [s for s in (20, 40, 60) if s <= max_n] or [max_n]
    rng = random.Random(seed)
    total = uncertified = 0
    for n in sizes:
        for _ in range(count):
            vals = list(range(1, n + 1))
            rng.shuffle(vals)
            p = Permutation(tuple(vals))
            sw = sort_permutation(p)
            if not verify_word(p, sw.word):
                return False, f"sorting word fails to sort at n={n}"
            if sw.certified_bound is None:
                uncertified += 1
            elif len(sw.word.moves) > sw.certified_bound:
                return False, f"certified word too long at n={n}"
            elif sw.certified_bound != eriksson_upper_bound(n):
                return False, f"wrong certificate value at n={n}"
            total += 1
    return True, f"{total} sorting words verified at n in {sizes}, {uncertified} uncertified"


SUITES = {
    "shifting": shifting_suite,
    "toric": toric_suite,
    "criteria": criteria_suite,
    "witness": witness_suite,
    "metric": metric_suite,
    "sort": sort_suite,
}
