"""
Permutations in one-line notation and the block transposition generators.

Conventions used throughout the package:

- A ``Permutation`` stores the one-line word (pi_1, ..., pi_n) over {1, ..., n}.
- An ``ExtendedPermutation`` stores a word of length n + 1 over {0, ..., n}.
  The extension of pi is [0 pi]; other extended words arise as rotations of it.
- Cut points i < j < k select the position blocks (i+1 .. j) and (j+1 .. k).
  The block transposition sigma(i, j, k) swaps those two blocks.  Plain cut
  points satisfy 0 <= i; extended cut points also allow i = -1, in which case
  the swapped blocks may absorb position 0 of an extended word.
- ``compose(p, q)`` is right-to-left composition, (p * q)(x) = p(q(x)), so
  applying a move to a permutation means composing with it on the right.
- A bond of a word is an adjacent pair (v, v+1).  ``linear_bonds`` counts the
  bonds of the bordered word 0 pi_1 ... pi_n n+1; ``circular_bonds`` counts
  bonds of an extended word read cyclically, with values modulo n + 1.  The
  two notions agree on pi and [0 pi], which is why both are exposed.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, Sequence

from .errors import InputError, PreconditionError

#: Hard ceiling on permutation sizes accepted from callers.  Large enough for
#: any realistic use; small enough to fail fast on nonsense like ``10**12``.
MAX_N = 10**6


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 1, 3)).n
    3
    >>> Permutation((2, 2))
    Traceback (most recent call last):
        ...
    btdist.errors.InputError: not a permutation of 1..2: offending value 2
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n > MAX_N:
            raise InputError(f"permutation length {n} exceeds MAX_N = {MAX_N}")
        seen = bytearray(n + 1)
        for v in values:
            if type(v) is not int or not 1 <= v <= n or seen[v]:
                raise InputError(f"not a permutation of 1..{n}: offending value {v!r}")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def is_identity(self) -> bool:
        return _is_identity(self.values)

    def is_reverse(self) -> bool:
        """True if this is the decreasing word (n, n-1, ..., 1)."""
        return _is_reverse(self.values)


@dataclasses.dataclass(frozen=True)
class ExtendedPermutation:
    """A permutation of {0, ..., n} in one-line notation (length n + 1)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InputError("an extended permutation has at least the value 0")
        n = len(values) - 1
        if n > MAX_N:
            raise InputError(f"permutation length {n} exceeds MAX_N = {MAX_N}")
        seen = bytearray(n + 1)
        for v in values:
            if type(v) is not int or not 0 <= v <= n or seen[v]:
                raise InputError(f"not a permutation of 0..{n}: offending value {v!r}")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)


@dataclasses.dataclass(frozen=True)
class CutPoints:
    """Cut points (i, j, k) of a block transposition on {1, ..., n}.

    ``extended=True`` admits i = -1, the extra cut available on extended
    words.  ``invert()`` gives the cut points of the inverse move: swapping
    back the two blocks is the block transposition (i, k - j + i, k).
    """

    i: int
    j: int
    k: int
    n: int
    extended: bool = False

    def __post_init__(self) -> None:
        lower = -1 if self.extended else 0
        if not (lower <= self.i < self.j < self.k <= self.n):
            raise InputError(
                f"invalid cut points ({self.i}, {self.j}, {self.k}) for n={self.n}"
                f" (need {lower} <= i < j < k <= n)"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def invert(self) -> "CutPoints":
        return CutPoints(self.i, self.k - self.j + self.i, self.k, self.n, self.extended)


@dataclasses.dataclass(frozen=True)
class BondCount:
    """Number of bonds of a word, tagged with the convention used to count them."""

    count: int
    kind: str  # "linear" or "circular"

    def __int__(self) -> int:
        return self.count


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reverse_permutation(n: int) -> Permutation:
    """The decreasing word (n, n-1, ..., 1).

    >>> reverse_permutation(4).values
    (4, 3, 2, 1)
    """
    return Permutation(tuple(range(n, 0, -1)))


def parse_permutation(text: str) -> Permutation:
    """Parse a one-line word from whitespace- or comma-separated text.

    >>> parse_permutation("4, 1, 3, 2").values
    (4, 1, 3, 2)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise InputError("empty permutation text")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise InputError(f"cannot parse permutation entry {tok!r}") from None
    return Permutation(tuple(values))


def format_permutation(perm: Permutation | ExtendedPermutation) -> str:
    return " ".join(str(v) for v in perm.values)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p * q)(x) = p(q(x)).

    >>> compose(Permutation((1, 3, 4, 2, 5)), Permutation((1, 4, 2, 3, 5))).values
    (1, 2, 3, 4, 5)
    """
    if p.n != q.n:
        raise InputError(f"cannot compose permutations of sizes {p.n} and {q.n}")
    pv = p.values
    return Permutation(tuple(pv[v - 1] for v in q.values))


def compose_extended(p: ExtendedPermutation, q: ExtendedPermutation) -> ExtendedPermutation:
    if p.n != q.n:
        raise InputError(f"cannot compose extended permutations of sizes {p.n} and {q.n}")
    pv = p.values
    return ExtendedPermutation(tuple(pv[v] for v in q.values))


def inverse(p: Permutation) -> Permutation:
    """
    >>> inverse(Permutation((4, 1, 6, 2, 5, 7, 3))).values
    (2, 4, 7, 1, 5, 3, 6)
    """
    inv = [0] * p.n
    for pos, v in enumerate(p.values):
        inv[v - 1] = pos + 1
    return Permutation(tuple(inv))


def extend(p: Permutation) -> ExtendedPermutation:
    """The extended word [0 pi]."""
    return ExtendedPermutation((0,) + p.values)


def restrict(e: ExtendedPermutation) -> Permutation:
    """Drop the leading 0 of an extended word that fixes it."""
    if e.values[0] != 0:
        raise PreconditionError("restrict needs an extended word starting with 0; rotate first")
    return Permutation(e.values[1:])


def block_transposition(cp: CutPoints) -> Permutation:
    """The one-line word of sigma(i, j, k) on {1, ..., n}.

    >>> block_transposition(CutPoints(1, 3, 5, 6)).values
    (1, 4, 5, 2, 3, 6)
    """
    if cp.extended:
        raise PreconditionError("extended cut points describe a move on extended words")
    i, j, k, n = cp.i, cp.j, cp.k, cp.n
    return Permutation(
        tuple(range(1, i + 1))
        + tuple(range(j + 1, k + 1))
        + tuple(range(i + 1, j + 1))
        + tuple(range(k + 1, n + 1))
    )


def extended_block_transposition(cp: CutPoints) -> ExtendedPermutation:
    """The extended move on {0, ..., n}; for i >= 0 this is [0 sigma(i, j, k)]."""
    i, j, k, n = cp.i, cp.j, cp.k, cp.n
    return ExtendedPermutation(
        tuple(range(0, i + 1))
        + tuple(range(j + 1, k + 1))
        + tuple(range(i + 1, j + 1))
        + tuple(range(k + 1, n + 1))
    )


def invert_cut_points(cp: CutPoints) -> CutPoints:
    """Cut points of the inverse move: sigma(i, j, k)^-1 = sigma(i, k-j+i, k).

    >>> invert_cut_points(CutPoints(1, 2, 4, 5)).as_tuple()
    (1, 3, 4)
    """
    return cp.invert()


def enumerate_block_transpositions(n: int) -> Iterator[CutPoints]:
    """All C(n+1, 3) plain cut points on {1, ..., n} in lexicographic order."""
    if n < 2:
        raise InputError(f"no block transpositions exist on n={n}; need n >= 2")
    for i in range(n - 1):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                yield CutPoints(i, j, k, n)


def apply_block_move(p: Permutation, cp: CutPoints) -> Permutation:
    """Apply sigma(i, j, k) on the right of p: swap the position blocks.

    Equivalent to ``compose(p, block_transposition(cp))``, computed by
    splicing slices.

    >>> apply_block_move(Permutation((4, 1, 6, 2, 5, 7, 3)), CutPoints(0, 3, 7, 7)).values
    (2, 5, 7, 3, 4, 1, 6)
    """
    if cp.extended:
        raise PreconditionError("extended cut points describe a move on extended words")
    if cp.n != p.n:
        raise InputError(f"cut points are for n={cp.n}, permutation has n={p.n}")
    v = p.values
    i, j, k = cp.i, cp.j, cp.k
    return Permutation(v[:i] + v[j:k] + v[i:j] + v[k:])


def apply_block_move_extended(e: ExtendedPermutation, cp: CutPoints) -> ExtendedPermutation:
    """Apply the (possibly extended) move on the right of an extended word."""
    if cp.n != e.n:
        raise InputError(f"cut points are for n={cp.n}, extended word has n={e.n}")
    v = e.values
    i1, j1, k1 = cp.i + 1, cp.j + 1, cp.k + 1
    return ExtendedPermutation(v[:i1] + v[j1:k1] + v[i1:j1] + v[k1:])


def linear_bonds(p: Permutation) -> BondCount:
    """Bonds of the bordered word 0 pi_1 ... pi_n n+1.

    >>> linear_bonds(Permutation((1, 2, 4, 3))).count
    2
    """
    return BondCount(_linear_bond_count(p.values), "linear")


def circular_bonds(e: ExtendedPermutation) -> BondCount:
    """Bonds of an extended word read cyclically, values modulo n + 1.

    >>> circular_bonds(ExtendedPermutation((0, 1, 4, 5, 2, 3, 6))).count
    4
    """
    return BondCount(_circular_bond_count(e.values), "circular")


# -- raw-tuple helpers shared by the heavier modules ------------------------
#
# The dataclass wrappers validate on every construction, which is the right
# default at the API boundary but too slow inside search loops.  The functions
# below work on bare tuples.


def _is_identity(values: Sequence[int]) -> bool:
    return all(v == x + 1 for x, v in enumerate(values))


def _is_reverse(values: Sequence[int]) -> bool:
    n = len(values)
    return all(v == n - x for x, v in enumerate(values))


def _linear_bond_count(values: Sequence[int]) -> int:
    prev = 0
    count = 0
    for v in values:
        if v == prev + 1:
            count += 1
        prev = v
    if prev == len(values):
        count += 1
    return count


def _circular_bond_count(values: Sequence[int]) -> int:
    n1 = len(values)
    count = 0
    for t in range(n1):
        if values[(t + 1) % n1] == (values[t] + 1) % n1:
            count += 1
    return count


def _apply_cuts_right(values: tuple[int, ...], i: int, j: int, k: int) -> tuple[int, ...]:
    # one-line words over {1..n}; cuts are plain (i >= 0)
    return values[:i] + values[j:k] + values[i:j] + values[k:]


def _apply_cuts_right_ext(values: tuple[int, ...], i: int, j: int, k: int) -> tuple[int, ...]:
    # extended words over {0..n}; i = -1 allowed
    i1, j1, k1 = i + 1, j + 1, k + 1
    return values[:i1] + values[j1:k1] + values[i1:j1] + values[k1:]
