"""
Bond-creating moves and the constructive three-bond configurations.

A junction of an extended word is an adjacent pair read cyclically; it is a
bond when the values are consecutive modulo n + 1.  Two scan criteria find a
single move that creates at least two new bonds without destroying any:

- right criteria (the move is applied on the right, cutting positions):
  R-i   [... x ... y x+1 ... y+1 ...]   -> cuts (pos(x), pos(y), pos(y+1)-1)
  R-ii  [... x ... x-1 x+1 ...]         -> cuts (pos(x)-1, pos(x), pos(x-1))
- left criteria (the move is applied on the left, cutting values), for a
  positively oriented pattern [... x y ... z x+1 ...] or [... x y x+1 ...]:
  L-1 (x < y < z), L-2 (y < z < x), L-3 (z < x < y), L-4 (x < y), L-5 (y < x).

Both finders scan junctions left to right, pattern (i) before pattern (ii),
so their first match is deterministic.  Cut point i = -1 can occur (the move
then absorbs position 0 or the value 0); such moves are handled by expanding
them into a rotation followed by a 0-fixing move.

``three_bond_witness`` packages the constructive result: every bondless
permutation other than the reverse admits two moves, placed left/right around
a representative of its toric class, whose composite has at least three
bonds.  Witnesses returned here are always anchored to the input itself
(rho = pi, toric_r = 0): intermediate configurations found on other toric
representatives are re-anchored with the shifting identity before being
returned, which is what makes them safe to transport through the collapsing
recursions of the sorter.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
from collections import Counter

from .errors import (
    CapabilityError,
    ContractError,
    InputError,
    OracleRefutationError,
    PreconditionError,
    VerificationError,
)
from .perm_core import (
    CutPoints,
    ExtendedPermutation,
    Permutation,
    _apply_cuts_right_ext,
    _circular_bond_count,
    _is_reverse,
    _linear_bond_count,
)
from .toric import Word, _shift_left_raw, _shift_raw

logger = logging.getLogger(__name__)

#: Diagnostic counters: how often each witness construction phase fired.
_PHASE_COUNTS: Counter[str] = Counter()


class Placement(enum.Enum):
    """How the two moves of a witness sit around the extended word [0 rho]."""

    RIGHT_RIGHT = "right-right"  # bonds([0 rho] . sigma . tau)
    LEFT_RIGHT = "left-right"    # bonds(sigma . [0 rho] . tau)
    LEFT_LEFT = "left-left"      # bonds(sigma . tau . [0 rho])


@dataclasses.dataclass(frozen=True)
class MoveSuggestion:
    """A single move found by one of the scan criteria."""

    cut_points: CutPoints
    side: str            # "left" or "right"
    criterion_case: str  # "R-i", "R-ii", "L-1" .. "L-5"
    fixes_zero: bool     # equivalent to cut_points.i >= 0


@dataclasses.dataclass(frozen=True)
class Witness:
    """Two moves whose composite around [0 rho] has >= 3 circular bonds.

    ``rho`` is torically equivalent to the permutation the witness was built
    for, via ``toric_map(input, toric_r) == rho``.  ``achieved_bonds`` is the
    recounted bond number of the composite.
    """

    rho: Permutation
    toric_r: int
    sigma: CutPoints
    tau: CutPoints
    placement: Placement
    achieved_bonds: int


@dataclasses.dataclass(frozen=True)
class CollapseMap:
    """Outcome of merging every bond run of a bordered word.

    ``run_spans[s]`` is the (low, high) value range of the run that the
    reduced-bordered symbol s stands for, for s = 0 .. m + 1 where m is the
    size of the reduced permutation.
    """

    reduced: Permutation
    run_spans: tuple[tuple[int, int], ...]
    n: int


# -- raw helpers -------------------------------------------------------------


def _ebt_vals(i: int, j: int, k: int, n1: int) -> tuple[int, ...]:
    return (
        tuple(range(0, i + 1))
        + tuple(range(j + 1, k + 1))
        + tuple(range(i + 1, j + 1))
        + tuple(range(k + 1, n1))
    )


def _apply_right(vals: tuple[int, ...], cuts: tuple[int, int, int]) -> tuple[int, ...]:
    return _apply_cuts_right_ext(vals, *cuts)


def _apply_left(vals: tuple[int, ...], cuts: tuple[int, int, int]) -> tuple[int, ...]:
    bt = _ebt_vals(*cuts, len(vals))
    return tuple(bt[v] for v in vals)


def _positions(vals: tuple[int, ...]) -> list[int]:
    pos = [0] * len(vals)
    for idx, v in enumerate(vals):
        pos[v] = idx
    return pos


def _identity_ext(n1: int) -> tuple[int, ...]:
    return tuple(range(n1))


# -- the two-bond scan criteria ----------------------------------------------


def _iter_right_raw(vals):
    n1 = len(vals)
    pos = _positions(vals)
    for q in range(n1 - 1):
        y = vals[q]
        x = (vals[q + 1] - 1) % n1
        p = pos[x]
        if p >= q:
            continue
        s = pos[(y + 1) % n1]
        if s > q + 1:
            yield "R-i", (p, q, s - 1)
    for q in range(n1 - 1):
        v = vals[q]
        if vals[q + 1] != (v + 2) % n1:
            continue
        p = pos[(v + 1) % n1]
        if p < q:
            yield "R-ii", (p - 1, p, q)


def _iter_left_raw(vals):
    n1 = len(vals)
    pos = _positions(vals)
    for p in range(n1 - 1):
        x = vals[p]
        y = vals[p + 1]
        qq = pos[(x + 1) % n1] - 1
        if qq < p + 2:
            continue
        z = vals[qq]
        if x < y < z:
            yield "L-1", (x, x + z - y + 1, z)
        elif y < z < x:
            yield "L-2", (y - 1, y - 1 + x - z, x)
        elif z < x < y:
            yield "L-3", (z, z + y - 1 - x, y - 1)
    for p in range(n1 - 2):
        x = vals[p]
        y = vals[p + 1]
        if vals[p + 2] != (x + 1) % n1:
            continue
        if x < y:
            yield "L-4", (x, x + 1, y)
        else:
            yield "L-5", (y - 1, x - 1, x)


def _first_right_raw(vals):
    return next(_iter_right_raw(vals), None)


def _first_left_raw(vals):
    return next(_iter_left_raw(vals), None)


def _suggestions(e: ExtendedPermutation, side: str, raw_iter):
    out = []
    for case, cuts in raw_iter:
        cp = CutPoints(*cuts, e.n, extended=True)
        out.append(MoveSuggestion(cp, side, case, fixes_zero=cuts[0] >= 0))
    return tuple(out)


def find_2move_right(e: ExtendedPermutation, *, all_matches: bool = False):
    """First right-criterion move on e, or None; every match if requested.

    Applying a suggested move on the right of e raises the circular bond
    count by at least 2.
    """
    matches = _suggestions(e, "right", _iter_right_raw(e.values))
    if all_matches:
        return matches
    return matches[0] if matches else None


def find_2move_left(e: ExtendedPermutation, *, all_matches: bool = False):
    """First left-criterion move on e, or None; every match if requested."""
    matches = _suggestions(e, "left", _iter_left_raw(e.values))
    if all_matches:
        return matches
    return matches[0] if matches else None


# -- bond collapsing ---------------------------------------------------------


def collapse_bonds(p: Permutation) -> CollapseMap:
    """Merge each maximal run of consecutive values of the bordered word.

    The reduced permutation is bondless (borders included).  The identity
    collapses to the empty permutation.

    >>> collapse_bonds(Permutation((1, 2, 4, 3))).reduced.values
    (2, 1)
    """
    n = p.n
    bordered = (0,) + p.values + (n + 1,)
    runs: list[tuple[int, int]] = []
    lo = prev = bordered[0]
    for v in bordered[1:]:
        if v == prev + 1:
            prev = v
            continue
        runs.append((lo, prev))
        lo = prev = v
    runs.append((lo, prev))
    if len(runs) == 1:
        return CollapseMap(Permutation(()), ((0, n), (n + 1, n + 1)), n)
    spans = tuple(sorted(runs))
    symbol = {span[0]: s for s, span in enumerate(spans)}
    seq = [symbol[r[0]] for r in runs]
    if seq[0] != 0 or seq[-1] != len(runs) - 1:
        raise ContractError("collapse produced a word without its borders")
    return CollapseMap(Permutation(tuple(seq[1:-1])), spans, n)


def _expand_moves(moves, cmap: CollapseMap):
    """Raw form of expand_word: cuts on the reduced word -> cuts on [n]."""
    reduced = cmap.reduced.values
    m = len(reduced)
    lam = [hi - lo + 1 for lo, hi in cmap.run_spans]
    cur = [0] + list(reduced) + [m + 1]
    out = []
    for i, j, k in moves:
        acc = 0
        sums = []
        for t in range(m + 2):
            acc += lam[cur[t]]
            sums.append(acc)
        out.append((sums[i] - 1, sums[j] - 1, sums[k] - 1))
        cur = cur[: i + 1] + cur[j + 1 : k + 1] + cur[i + 1 : j + 1] + cur[k + 1 :]
    return out


def expand_word(word: Word, cmap: CollapseMap) -> Word:
    """Blow a word on the reduced permutation up to one on {1, ..., n}.

    Each reduced move is mapped to the move on the full word that transports
    the corresponding value runs, so sorting words stay sorting words and the
    length is unchanged.
    """
    if word.n != cmap.reduced.n:
        raise InputError(
            f"word on n={word.n} does not act on a reduced permutation of size {cmap.reduced.n}"
        )
    expanded = _expand_moves([cp.as_tuple() for cp in word.moves], cmap)
    return Word(tuple(CutPoints(*t, cmap.n) for t in expanded), cmap.n)


# -- reducibility ------------------------------------------------------------


def is_reducible(p: Permutation) -> int | None:
    """Smallest k with pi = [A k B], A a word on {1..k-1}, B on {k+1..n}.

    >>> is_reducible(Permutation((2, 1, 3, 5, 4)))
    3
    >>> is_reducible(Permutation((2, 3, 1))) is None
    True
    """
    prefix_max = 0
    for t, v in enumerate(p.values[:-1], start=1):
        if v == t and prefix_max == t - 1:
            return t
        if v > prefix_max:
            prefix_max = v
    return None


# -- one-bond moves ----------------------------------------------------------


def _iter_right_1moves(vals):
    """Cuts that create the bond (x, x+1) by closing the gap between them.

    Yields only candidates whose recount confirms a strict gain, in ascending
    order of x.
    """
    n1 = len(vals)
    pos = _positions(vals)
    before = _circular_bond_count(vals)
    for x in range(n1):
        xb = (x + 1) % n1
        t = pos[xb]
        if t == 0:
            continue
        px = pos[x]
        succ = vals[px + 1] if px + 1 < n1 else vals[0]
        if succ == xb:
            continue
        e = t
        while e < n1 - 1 and vals[e + 1] == (vals[e] + 1) % n1:
            e += 1
        cuts = (px, t - 1, e) if t > px else (t - 1, e, px)
        i, j, k = cuts
        if not -1 <= i < j < k <= n1 - 1:
            continue
        if _circular_bond_count(_apply_right(vals, cuts)) > before:
            yield cuts


def _find_right_1move(vals):
    return next(_iter_right_1moves(vals), None)


# -- configuration plumbing --------------------------------------------------
#
# A raw configuration is (left_tokens, mid, right_tokens) where mid is an
# extended word and the tokens, read left to right in composition order, are
# ("bt", (i, j, k)) or ("alpha", r).  Normalisation expands i = -1 moves,
# rotates mid to fix 0 and pushes every alpha factor off the ends, using the
# shifting identity; dropping the outer alphas does not change the circular
# bond count of the composite.


def _expand_neg_tokens(tokens, n1):
    out = []
    for kind, val in tokens:
        if kind == "bt" and val[0] == -1:
            _, b, c = val
            out.append(("alpha", (b + 1) % n1))
            if c != n1 - 1:
                out.append(("bt", (c - b - 1, n1 - b - 2, n1 - 1)))
        else:
            out.append((kind, val))
    return out


def _normalize_config(n1, left_tokens, mid, right_tokens):
    """Return (mid', lefts, rights): 0-first mid and plain cuts, innermost first."""
    left_tokens = _expand_neg_tokens(left_tokens, n1)
    right_tokens = _expand_neg_tokens(right_tokens, n1)
    z = mid.index(0)
    if z:
        mid = tuple(mid[(x + z) % n1] for x in range(n1))
        right_tokens = [("alpha", (n1 - z) % n1)] + right_tokens
    rights = []
    carry = 0
    for kind, val in right_tokens:
        if kind == "alpha":
            carry = (carry + val) % n1
        elif carry == 0:
            rights.append(val)
        else:
            cuts, carry = _shift_left_raw(carry, val, n1)
            rights.append(cuts)
    lefts = []
    carry = 0
    for kind, val in reversed(left_tokens):
        if kind == "alpha":
            carry = (val + carry) % n1
        elif carry == 0:
            lefts.append(val)
        else:
            t, cuts, _ = _shift_raw(val, carry, n1)
            lefts.append(cuts)
            carry = t
    return mid, lefts, rights


def _eval_config(mid, lefts, rights):
    cur = mid
    for cuts in lefts:
        cur = _apply_left(cur, cuts)
    for cuts in rights:
        cur = _apply_right(cur, cuts)
    return cur


def _reanchor_config(n1, mid, lefts, rights, target):
    """Rewrite the cuts so the configuration applies to ``target`` exactly.

    ``target`` must be a 0-first extended word in the toric class of mid.
    The circular bond count of the composite is unchanged.
    """
    if mid == target:
        return lefts, rights
    for r in range(n1):
        vs = target[r]
        cand = tuple((target[(x + r) % n1] - vs) % n1 for x in range(n1))
        if cand == mid:
            break
    else:
        raise ContractError("configuration mid-word left the toric class of its target")
    new_lefts = []
    carry = (n1 - vs) % n1
    for cuts in lefts:
        t, cuts2, _ = _shift_raw(cuts, carry, n1)
        new_lefts.append(cuts2)
        carry = t
    new_rights = []
    carry = r
    for cuts in rights:
        cuts2, carry = _shift_left_raw(carry, cuts, n1)
        new_rights.append(cuts2)
    return new_lefts, new_rights


def _two_factorization(cuts, n1):
    """Split one move into two whose composition equals it (left factor first)."""
    i, j, k = cuts
    n = n1 - 1
    width = k - i
    if width >= 3:
        s = j - i
        s1 = 1 if s != 1 else width - 1
        s2 = (s - s1) % width
        return (i, i + s1, k), (i, i + s2, k)
    if k + 1 <= n:
        return (i, i + 1, k + 1), (i + 1, i + 2, k + 1)
    if i >= 1:
        return (i - 1, i + 1, i + 2), (i - 1, i, i + 1)
    raise ContractError("no factorization for an adjacent swap on n < 3")


def _complete_config(n1, mid, lefts, rights):
    """Grow a one-move configuration to exactly two moves, keeping >= 3 bonds."""
    total = len(lefts) + len(rights)
    if total == 2:
        return lefts, rights
    if total != 1:
        raise ContractError(f"cannot complete a configuration with {total} moves")
    comp = _eval_config(mid, lefts, rights)
    if comp == _identity_ext(n1):
        if rights:
            a, b = _two_factorization(rights[0], n1)
            return lefts, [a, b]
        a, b = _two_factorization(lefts[0], n1)
        return [b, a], rights
    extra = _find_right_1move(comp)
    if extra is None:
        raise ContractError("no bond-creating move on a non-identity composite")
    return lefts, rights + [extra]


# -- witness construction ----------------------------------------------------


def _distinct_reps(p: Permutation):
    """(r, [0 toric_map(p, r)]) for each distinct representative, r ascending."""
    ev = (0,) + p.values
    n1 = len(ev)
    out = []
    seen = set()
    for r in range(n1):
        vs = ev[r]
        rep = tuple((ev[(x + r) % n1] - vs) % n1 for x in range(n1))
        if rep not in seen:
            seen.add(rep)
            out.append((r, rep))
    return out


def _locate_2move(vals):
    """Search every rotation of vals for a criterion move; None if there is none."""
    n1 = len(vals)
    for w in range(n1):
        rot = tuple(vals[(x + w) % n1] for x in range(n1)) if w else vals
        m = _first_right_raw(rot)
        if m is not None:
            return w, "right", m[1]
        m = _first_left_raw(rot)
        if m is not None:
            return w, "left", m[1]
    return None


def _tokens_for_located(rep, first_cuts, loc):
    w, side, cuts = loc
    rights = [("bt", first_cuts)]
    if w:
        rights.append(("alpha", w))
    if side == "right":
        return [], rep, rights + [("bt", cuts)]
    return [("bt", cuts)], rep, rights


def _phase3_raw(p: Permutation):
    """The case analysis on a span-minimal representative; None if nothing fits."""
    n = p.n
    n1 = n + 1
    ev = (0,) + p.values
    pos_ev = _positions(ev)
    best_key = None
    best_m = 1
    for m in range(1, n1):
        span = (pos_ev[(m + 1) % n1] - pos_ev[m]) % n1
        if best_key is None or (span, m) < best_key:
            best_key = (span, m)
            best_m = m
    r0 = pos_ev[best_m]
    vs = ev[r0]
    rep = tuple((ev[(x + r0) % n1] - vs) % n1 for x in range(n1))
    pos = _positions(rep)
    l = pos[1] - 1
    if l < 2:
        return None
    x = rep[1 : l + 1]
    x1, x2, xl = x[0], x[1], x[-1]
    cands: list[tuple[int, int, int]] = []
    if not (x1 > x2 > xl):
        if x1 != n:
            cands.append((0, l, pos[x1 + 1] - 1))
        else:
            cands.append((0, l, n))
    elif x2 == x1 - 1:
        for i in range(3, l + 1):
            pxb = pos[(x[i - 1] + 1) % n1]
            if pxb > pos[1]:
                cands.append((1, i, pxb - 1))
    else:
        chain = 1
        for i in range(1, l):
            if x[i - 1] >= x[i] + 2:
                chain = i + 1
            else:
                break
        for k in range(min(chain, l - 1), 1, -1):
            if x[k - 1] > xl:
                pxk = pos[(x[k - 1] + 1) % n1]
                cands.append((0, l, pxk - 1))
                cands.append((k - 2, k, pxk - 1))
                cands.append((0, k, pos[x1 - 1]))
                break
    if x1 != n and all(x[i] == x1 - i for i in range(l)):
        xn = rep[n]
        if 1 < xn < xl:
            cands.append((l - 2, pos[n], n))
        if x1 < xn < n:
            cands.append((0, l, pos[n]))
    if x1 == n:
        p2 = pos[2]
        pnl = pos[n - l]
        if p2 < pnl:
            cands.append((l - 1, p2 - 1, pnl))
        else:
            cands.append((l - 2, l + 1, p2 - 1))
    q = pos[n]
    if q >= 2:
        e = q
        while e < n and rep[e + 1] == rep[e] - 1:
            e += 1
        if e - q + 1 >= 3 and e < n:
            if rep[q - 1] == rep[q - 2] - 1 and rep[e + 1] == rep[q - 1] - 1:
                cands.append((q - 2, e - 2, e + 1))
    before = _circular_bond_count(rep)
    for cuts in cands:
        i, j, k = cuts
        if not 0 <= i < j < k <= n:
            continue
        res = _apply_right(rep, cuts)
        if _circular_bond_count(res) <= before:
            continue
        loc = _locate_2move(res)
        if loc is not None:
            return _tokens_for_located(rep, cuts, loc)
    return None


def _phase4_raw(reps):
    for _r, rep in reps:
        for cuts in _iter_right_1moves(rep):
            res = _apply_right(rep, cuts)
            loc = _locate_2move(res)
            if loc is not None:
                return _tokens_for_located(rep, cuts, loc)
    return None


def _phase5_raw(p: Permutation):
    if p.n > 9:
        raise VerificationError(
            f"no three-bond configuration found for {p.values} and n={p.n} is too"
            " large for the exhaustive fallback"
        )
    w = witness_oracle(p)
    mid = (0,) + w.rho.values
    sigma = w.sigma.as_tuple()
    tau = w.tau.as_tuple()
    if w.placement is Placement.RIGHT_RIGHT:
        return [], mid, [("bt", sigma), ("bt", tau)]
    if w.placement is Placement.LEFT_RIGHT:
        return [("bt", sigma)], mid, [("bt", tau)]
    return [("bt", sigma), ("bt", tau)], mid, []


def _irreducible_config(p: Permutation):
    n1 = p.n + 1
    target = (0,) + p.values
    reps = _distinct_reps(p)
    raw = None
    for _r, rep in reps:
        m = _first_right_raw(rep)
        if m is not None:
            raw = ([], rep, [("bt", m[1])])
            break
        m = _first_left_raw(rep)
        if m is not None:
            raw = ([("bt", m[1])], rep, [])
            break
    if raw is None:
        _PHASE_COUNTS["rotation-sweep"] += 1
        logger.debug("no direct criterion match for %s; sweeping rotations", p.values)
        for _r, rep in reps:
            for w in range(1, n1):
                rot = tuple(rep[(x + w) % n1] for x in range(n1))
                m = _first_right_raw(rot)
                if m is not None:
                    raw = ([], rep, [("alpha", w), ("bt", m[1])])
                    break
                m = _first_left_raw(rot)
                if m is not None:
                    raw = ([("bt", m[1])], rep, [("alpha", w)])
                    break
            if raw is not None:
                break
    if raw is None:
        _PHASE_COUNTS["case-analysis"] += 1
        raw = _phase3_raw(p)
    if raw is None:
        _PHASE_COUNTS["one-move-sweep"] += 1
        logger.debug("case analysis found nothing for %s; sweeping one-bond moves", p.values)
        raw = _phase4_raw(reps)
    if raw is None:
        _PHASE_COUNTS["exhaustive"] += 1
        logger.warning("constructive phases all failed for %s; brute-force fallback", p.values)
        raw = _phase5_raw(p)
    mid, lefts, rights = _normalize_config(n1, *raw)
    lefts, rights = _complete_config(n1, mid, lefts, rights)
    return _reanchor_config(n1, mid, lefts, rights, target)


def _red_config(n: int, s: int):
    """Explicit configuration for [s-1 .. 1, s, n .. s+1] (both halves reversed)."""
    lefts = [(1, n - s, n - 2)]
    rights = [(1, s + 1, n)]
    return lefts, rights


def _witness_config(p: Permutation):
    """Anchored configuration: cuts (lefts, rights) applying around [0 p] itself."""
    n = p.n
    k = is_reducible(p)
    if k is None:
        return _irreducible_config(p)
    vals = p.values
    head = vals[: k - 1]
    if not _is_reverse(head):
        return _witness_config(Permutation(head))
    core = tuple(v - k for v in vals[k:])
    if _is_reverse(core):
        return _red_config(n, k)
    sub_lefts, sub_rights = _witness_config(Permutation(core))
    shift = lambda c: (c[0] + k, c[1] + k, c[2] + k)
    return [shift(c) for c in sub_lefts], [shift(c) for c in sub_rights]


def _config_composite(p: Permutation, lefts, rights):
    return _eval_config((0,) + p.values, lefts, rights)


def _require_witness_domain(p: Permutation) -> None:
    if _linear_bond_count(p.values) != 0:
        raise PreconditionError(
            "three-bond configurations exist only for bondless permutations;"
            " collapse bonds first"
        )
    if _is_reverse(p.values):
        raise PreconditionError("the reverse permutation admits no three-bond configuration")


def _witness_from_config(p: Permutation, lefts, rights) -> Witness:
    bonds = _circular_bond_count(_config_composite(p, lefts, rights))
    if bonds < 3:
        raise ContractError(f"constructed configuration reaches only {bonds} bonds")
    n = p.n
    if len(rights) == 2 and not lefts:
        placement = Placement.RIGHT_RIGHT
        sigma, tau = rights
    elif len(lefts) == 1 and len(rights) == 1:
        placement = Placement.LEFT_RIGHT
        sigma, tau = lefts[0], rights[0]
    elif len(lefts) == 2 and not rights:
        placement = Placement.LEFT_LEFT
        sigma, tau = lefts[1], lefts[0]
    else:
        raise ContractError("configuration does not consist of exactly two moves")
    return Witness(
        rho=p,
        toric_r=0,
        sigma=CutPoints(*sigma, n),
        tau=CutPoints(*tau, n),
        placement=placement,
        achieved_bonds=bonds,
    )


def three_bond_witness(p: Permutation) -> Witness:
    """Two moves around [0 p] whose composite has at least three bonds.

    Requires a bondless input other than the reverse permutation.  The
    returned witness is anchored: rho == p and toric_r == 0.
    """
    _require_witness_domain(p)
    lefts, rights = _witness_config(p)
    return _witness_from_config(p, lefts, rights)


def evaluate_witness(w: Witness) -> int:
    """Recount the circular bonds of the composite a witness describes."""
    mid = (0,) + w.rho.values
    sigma = w.sigma.as_tuple()
    tau = w.tau.as_tuple()
    if w.placement is Placement.RIGHT_RIGHT:
        comp = _apply_right(_apply_right(mid, sigma), tau)
    elif w.placement is Placement.LEFT_RIGHT:
        comp = _apply_right(_apply_left(mid, sigma), tau)
    else:
        comp = _apply_left(_apply_left(mid, tau), sigma)
    return _circular_bond_count(comp)


def witness_oracle(p: Permutation) -> Witness:
    """Exhaustive first-match search for a witness; independent of the
    constructive phases, usable up to n = 9.

    Scans representatives by ascending r, placements in enum order, then both
    moves in lexicographic order.  Exhaustion raises OracleRefutationError:
    witnesses exist for every bondless non-reverse permutation, so a bare
    search failure refutes either the theory or this implementation.
    """
    _require_witness_domain(p)
    n = p.n
    if n > 9:
        raise CapabilityError("the witness oracle enumerates all move pairs; n <= 9 only")
    n1 = n + 1
    cuts = [
        (i, j, k)
        for i in range(n - 1)
        for j in range(i + 1, n)
        for k in range(j + 1, n + 1)
    ]
    for r, rep in _distinct_reps(p):
        rho = Permutation(rep[1:])
        left_applied = {c: _apply_left(rep, c) for c in cuts}
        for placement in Placement:
            for sc in cuts:
                if placement is Placement.RIGHT_RIGHT:
                    base = _apply_right(rep, sc)
                    candidates = ((tc, _apply_right(base, tc)) for tc in cuts)
                elif placement is Placement.LEFT_RIGHT:
                    base = left_applied[sc]
                    candidates = ((tc, _apply_right(base, tc)) for tc in cuts)
                else:
                    candidates = ((tc, _apply_left(left_applied[tc], sc)) for tc in cuts)
                for tc, comp in candidates:
                    bonds = _circular_bond_count(comp)
                    if bonds >= 3:
                        return Witness(
                            rho=rho,
                            toric_r=r,
                            sigma=CutPoints(*sc, n),
                            tau=CutPoints(*tc, n),
                            placement=placement,
                            achieved_bonds=bonds,
                        )
    raise OracleRefutationError(
        f"exhausted every representative and move pair for {p.values} without"
        " reaching three bonds"
    )


def _direct_configs(p: Permutation):
    """Anchored two-move configurations from direct criterion matches.

    Yields (lefts, rights) pairs anchored to [0 p], one per criterion match
    over all toric representatives.  Used by the sorter at n = 11 to pick a
    configuration whose composite is cheap to finish.
    """
    n1 = p.n + 1
    target = (0,) + p.values
    for _r, rep in _distinct_reps(p):
        matches = [("right", m) for m in _iter_right_raw(rep)]
        matches += [("left", m) for m in _iter_left_raw(rep)]
        for side, (_case, cuts) in matches:
            if side == "right":
                raw = ([], rep, [("bt", cuts)])
            else:
                raw = ([("bt", cuts)], rep, [])
            mid, lefts, rights = _normalize_config(n1, *raw)
            lefts, rights = _complete_config(n1, mid, lefts, rights)
            yield _reanchor_config(n1, mid, lefts, rights, target)
