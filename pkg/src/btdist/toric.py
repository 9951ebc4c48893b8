"""
Circular and toric equivalence of permutations.

Write alpha for the rotation value map x -> x + 1 (mod n + 1) on {0, ..., n}.
The circular class of pi is the set of index rotations [0 pi] . alpha^r; the
toric class allows value rotations too: alpha^m . [0 pi] . alpha^r.  Each
member of the toric class that fixes 0 can be written [0 rho] for a plain
permutation rho; ``toric_map`` produces those rho directly:

    toric_map(pi, r)(x) = pi~(x + r) - pi~(r)   (mod n + 1),

reading pi~ as [0 pi].  Block transposition distance is constant on toric
classes, which is what makes the machinery here worth having.

The central tool is the shifting identity: an index rotation can be moved
across an extended block transposition at the price of re-cutting it,

    [0 sigma(i, j, k)] . alpha^r = alpha^t . [0 sigma(i', j', k')],

with (t, i', j', k') given case by case in ``shift_block_transposition``.
``lift_word`` uses it to transport a whole sorting word across a toric
equivalence.
"""

from __future__ import annotations

import dataclasses

from .errors import ContractError, InputError, PreconditionError
from .perm_core import (
    CutPoints,
    ExtendedPermutation,
    Permutation,
    _apply_cuts_right,
    _is_identity,
    extend,
)


@dataclasses.dataclass(frozen=True)
class ToricWitness:
    """Certificate that two permutations are torically equivalent.

    If ``are_torically_equivalent(p, q)`` returns ``ToricWitness(r, s)`` then

        [0 q] = alpha^(-s) . [0 p] . alpha^r,

    where s = value_shift is the value of [0 p] at position r.
    """

    r: int
    value_shift: int


@dataclasses.dataclass(frozen=True)
class ShiftResult:
    """Outcome of moving alpha^r across an extended move (see module docstring)."""

    exponent: int
    cut_points: CutPoints
    case_id: int


@dataclasses.dataclass(frozen=True)
class Word:
    """A sequence of plain block transpositions on {1, ..., n}."""

    moves: tuple[CutPoints, ...]
    n: int

    def __post_init__(self) -> None:
        for cp in self.moves:
            if cp.n != self.n:
                raise InputError(f"word on n={self.n} contains a move for n={cp.n}")
            if cp.extended:
                raise InputError("words consist of plain (i >= 0) moves")

    def __len__(self) -> int:
        return len(self.moves)


def alpha_power(n: int, r: int) -> ExtendedPermutation:
    """The rotation alpha^r on {0, ..., n}."""
    if not 0 <= r <= n:
        raise InputError(f"rotation exponent {r} out of range 0..{n}")
    n1 = n + 1
    return ExtendedPermutation(tuple((x + r) % n1 for x in range(n1)))


def value_shift(e: ExtendedPermutation, s: int) -> ExtendedPermutation:
    """alpha^s . e: add s to every value, modulo n + 1.

    >>> value_shift(ExtendedPermutation((0, 4, 1, 6, 2, 5, 7, 3)), 1).values
    (1, 5, 2, 7, 3, 6, 0, 4)
    """
    n1 = len(e.values)
    if not 0 <= s < n1:
        raise InputError(f"value shift {s} out of range 0..{n1 - 1}")
    return ExtendedPermutation(tuple((v + s) % n1 for v in e.values))


def circular_class(p: Permutation) -> tuple[ExtendedPermutation, ...]:
    """All n + 1 index rotations [0 pi] . alpha^r, in order of r.

    >>> [e.values for e in circular_class(Permutation((2, 1)))]
    [(0, 2, 1), (2, 1, 0), (1, 0, 2)]
    """
    ev = extend(p).values
    n1 = len(ev)
    return tuple(
        ExtendedPermutation(tuple(ev[(x + r) % n1] for x in range(n1))) for r in range(n1)
    )


def linearize(e: ExtendedPermutation) -> Permutation:
    """Rotate the unique 0 to the front and drop it.

    >>> linearize(ExtendedPermutation((1, 0, 2))).values
    (2, 1)
    """
    ev = e.values
    n1 = len(ev)
    z = ev.index(0)
    return Permutation(tuple(ev[(x + z) % n1] for x in range(1, n1)))


def toric_map(p: Permutation, r: int) -> Permutation:
    """The member of the toric class of p anchored at position r of [0 pi]."""
    ev = extend(p).values
    n1 = len(ev)
    if not 0 <= r < n1:
        raise InputError(f"toric map index {r} out of range 0..{n1 - 1}")
    vs = ev[r]
    return Permutation(tuple((ev[(x + r) % n1] - vs) % n1 for x in range(1, n1)))


def toric_class_linearized(p: Permutation) -> tuple[Permutation, ...]:
    """The distinct toric_map(p, r), ordered by first appearance as r grows."""
    out: list[Permutation] = []
    seen: set[tuple[int, ...]] = set()
    for r in range(p.n + 1):
        q = toric_map(p, r)
        if q.values not in seen:
            seen.add(q.values)
            out.append(q)
    return tuple(out)


def are_torically_equivalent(p: Permutation, q: Permutation) -> ToricWitness | None:
    """Smallest-r witness that q lies in the toric class of p, else None."""
    if p.n != q.n:
        raise InputError(f"cannot compare permutations of sizes {p.n} and {q.n}")
    ev = extend(p).values
    for r in range(p.n + 1):
        if toric_map(p, r).values == q.values:
            return ToricWitness(r, ev[r])
    return None


def _shift_raw(cp: tuple[int, int, int], r: int, n1: int) -> tuple[int, tuple[int, int, int], int]:
    """Raw shifting identity: [0 sigma(cp)] . alpha^r = alpha^t . [0 sigma(cp')].

    Returns (t, cp', case_id).  Requires 0 <= cp[0] and 0 <= r < n1.
    """
    i, j, k = cp
    if r <= i:
        return r, (i - r, j - r, k - r), 1
    if r <= k - j + i:
        return (j - i + r) % n1, (k - j + i - r, n1 + 2 * i - j - r, n1 + i - r), 2
    if r <= k:
        return (j - k + r) % n1, (k - r, 2 * k - j - r, n1 + k - j + i - r), 3
    return r, (n1 + i - r, n1 + j - r, n1 + k - r), 4


def _shift_left_raw(s: int, cp: tuple[int, int, int], n1: int) -> tuple[tuple[int, int, int], int]:
    """Reverse direction: alpha^s . [0 sigma(cp)] = [0 sigma(cp'')] . alpha^s''."""
    i, j, k = cp
    t, (i2, j2, k2), _ = _shift_raw((i, k - j + i, k), (n1 - s) % n1, n1)
    return (i2, k2 - j2 + i2, k2), (n1 - t) % n1


def shift_block_transposition(cp: CutPoints, r: int, n: int | None = None) -> ShiftResult:
    """Move alpha^r across [0 sigma(i, j, k)] (see module docstring).

    ``n`` defaults to the ground-set size the cut points carry.

    >>> res = shift_block_transposition(CutPoints(2, 4, 6, 6), 1)
    >>> res.exponent, res.cut_points.as_tuple(), res.case_id
    (1, (1, 3, 5), 1)
    """
    if n is not None and n != cp.n:
        raise InputError(f"cut points live on n={cp.n}, not n={n}")
    if cp.i < 0:
        raise PreconditionError("the shifting identity applies to moves with i >= 0")
    n1 = cp.n + 1
    t, cuts, case_id = _shift_raw(cp.as_tuple(), r % n1, n1)
    return ShiftResult(t, CutPoints(*cuts, cp.n, cp.extended), case_id)


def lift_word(word: Word, witness: ToricWitness, target: Permutation) -> Word:
    """Transport a sorting word across a toric equivalence.

    If ``word`` sorts rho and ``witness == are_torically_equivalent(rho, target)``
    then the returned word sorts ``target`` and has the same length.  The
    result is verified before being returned.
    """
    n = target.n
    n1 = n + 1
    carry = witness.value_shift % n1
    lifted_rev: list[CutPoints] = []
    for cp in reversed(word.moves):
        t, cuts, _ = _shift_raw(cp.as_tuple(), carry, n1)
        lifted_rev.append(CutPoints(*cuts, n))
        carry = t
    if carry != witness.r % n1:
        raise ContractError("alpha exponent did not close up while lifting a word")
    lifted = Word(tuple(reversed(lifted_rev)), n)
    cur = target.values
    for cp in lifted.moves:
        cur = _apply_cuts_right(cur, cp.i, cp.j, cp.k)
    if not _is_identity(cur):
        raise ContractError("lifted word fails to sort the target permutation")
    return lifted
