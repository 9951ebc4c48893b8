"""Permutation algebra, block transpositions, and bond counting."""

import itertools

import pytest
from hypothesis import given, strategies as st

from btdist.errors import InputError
from btdist.perm_core import (
    BondCount,
    CutPoints,
    ExtendedPermutation,
    Permutation,
    apply_block_move,
    apply_block_move_extended,
    block_transposition,
    circular_bonds,
    compose,
    compose_extended,
    enumerate_block_transpositions,
    extend,
    extended_block_transposition,
    format_permutation,
    identity_permutation,
    inverse,
    invert_cut_points,
    linear_bonds,
    parse_permutation,
    restrict,
    reverse_permutation,
)


def perms(n: int):
    return st.permutations(list(range(1, n + 1))).map(lambda v: Permutation(tuple(v)))


def cut_points(n: int):
    return (
        st.lists(st.integers(min_value=0, max_value=n), min_size=3, max_size=3, unique=True)
        .map(sorted)
        .map(lambda t: CutPoints(t[0], t[1], t[2], n))
    )


class TestPermutationType:
    def test_validates_duplicates(self):
        with pytest.raises(InputError):
            Permutation((1, 1, 2))

    def test_validates_range(self):
        with pytest.raises(InputError):
            Permutation((1, 3))
        with pytest.raises(InputError):
            Permutation((0, 1))

    def test_constructors(self):
        assert identity_permutation(4).values == (1, 2, 3, 4)
        assert reverse_permutation(4).values == (4, 3, 2, 1)
        assert identity_permutation(4).is_identity()
        assert reverse_permutation(4).is_reverse()
        assert not reverse_permutation(4).is_identity()

    def test_extended_validates(self):
        with pytest.raises(InputError):
            ExtendedPermutation((1, 2, 3))  # missing the 0 symbol
        assert ExtendedPermutation((0, 2, 1, 3)).n == 3


class TestParseFormat:
    def test_accepts_commas_and_whitespace(self):
        assert parse_permutation("4, 1, 3, 2").values == (4, 1, 3, 2)
        assert parse_permutation("  4 1\t3 2 ").values == (4, 1, 3, 2)

    @pytest.mark.parametrize(
        "text,offending",
        [("1 2 2", "2"), ("1 3", "3"), ("0 1", "0"), ("2 3", "3")],
    )
    def test_rejects_naming_offender(self, text, offending):
        with pytest.raises(InputError) as exc:
            parse_permutation(text)
        assert offending in str(exc.value)

    def test_rejects_garbage(self):
        with pytest.raises(InputError):
            parse_permutation("1 x 2")
        with pytest.raises(InputError):
            parse_permutation("")

    @given(st.integers(min_value=1, max_value=8).flatmap(perms))
    def test_roundtrip(self, p):
        assert parse_permutation(format_permutation(p)) == p


class TestCompose:
    def test_known_values(self):
        a = Permutation((2, 3, 1))
        b = Permutation((3, 1, 2))
        assert compose(a, b) == identity_permutation(3)
        assert compose(Permutation((1, 3, 4, 2, 5)), Permutation((1, 4, 2, 3, 5))) == identity_permutation(5)

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            compose(Permutation((1, 2)), Permutation((1, 2, 3)))

    @given(perms(6), perms(6), perms(6))
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(st.integers(min_value=1, max_value=7).flatmap(perms))
    def test_identity_laws(self, p):
        e = identity_permutation(p.n)
        assert compose(p, e) == p
        assert compose(e, p) == p

    @given(perms(6), perms(6))
    def test_result_is_bijection(self, a, b):
        assert sorted(compose(a, b).values) == list(range(1, 7))


class TestInverse:
    def test_known_values(self):
        assert inverse(Permutation((3, 1, 2))) == Permutation((2, 3, 1))
        assert inverse(Permutation((4, 1, 6, 2, 5, 7, 3))) == Permutation((2, 4, 7, 1, 5, 3, 6))

    @given(st.integers(min_value=1, max_value=8).flatmap(perms))
    def test_two_sided(self, p):
        e = identity_permutation(p.n)
        assert compose(p, inverse(p)) == e
        assert compose(inverse(p), p) == e


class TestBlockTransposition:
    @pytest.mark.parametrize(
        "cp,expected",
        [
            ((1, 2, 4), (1, 3, 4, 2, 5)),
            ((0, 2, 5), (3, 4, 5, 1, 2)),
            ((1, 3, 5), (1, 4, 5, 2, 3)),
        ],
    )
    def test_one_line_forms(self, cp, expected):
        assert block_transposition(CutPoints(*cp, 5)).values == expected

    def test_invalid_cuts(self):
        with pytest.raises(InputError):
            CutPoints(1, 1, 2, 4)
        with pytest.raises(InputError):
            CutPoints(0, 1, 5, 4)
        with pytest.raises(InputError):
            CutPoints(-1, 1, 3, 4)
        assert CutPoints(-1, 1, 3, 4, extended=True).as_tuple() == (-1, 1, 3)

    def test_interval_structure(self):
        # values step by +1 inside each of the four blocks, exhaustively
        for n in range(2, 9):
            for cp in enumerate_block_transpositions(n):
                w = block_transposition(cp).values
                breaks = {t for t in range(n - 1) if w[t + 1] != w[t] + 1}
                i, j, k = cp.as_tuple()
                assert breaks <= {i - 1, i + k - j - 1, k - 1}

    def test_apply_matches_compose_known_values(self):
        assert apply_block_move(Permutation((4, 3, 2, 1)), CutPoints(0, 1, 2, 4)).values == (3, 4, 2, 1)
        assert apply_block_move(identity_permutation(5), CutPoints(1, 2, 4, 5)).values == (1, 3, 4, 2, 5)
        assert apply_block_move(
            Permutation((4, 1, 6, 2, 5, 7, 3)), CutPoints(0, 3, 7, 7)
        ).values == (2, 5, 7, 3, 4, 1, 6)

    @given(perms(7), cut_points(7))
    def test_apply_is_right_composition(self, p, cp):
        assert apply_block_move(p, cp) == compose(p, block_transposition(cp))

    @given(cut_points(6))
    def test_apply_extended_matches(self, cp):
        e = ExtendedPermutation(tuple(range(7)))
        moved = apply_block_move_extended(e, cp)
        assert moved == compose_extended(e, extended_block_transposition(cp))

    def test_inverse_cuts(self):
        assert invert_cut_points(CutPoints(1, 2, 4, 5)).as_tuple() == (1, 3, 4)
        assert invert_cut_points(CutPoints(0, 2, 5, 5)).as_tuple() == (0, 3, 5)
        for n in range(2, 9):
            for cp in enumerate_block_transpositions(n):
                prod = compose(block_transposition(cp), block_transposition(invert_cut_points(cp)))
                assert prod.is_identity()


class TestEnumeration:
    def test_counts(self):
        for n in range(2, 9):
            cps = list(enumerate_block_transpositions(n))
            assert len(cps) == (n + 1) * n * (n - 1) // 6
            assert cps == sorted(cps, key=lambda c: c.as_tuple())
            moved = {block_transposition(c).values for c in cps}
            assert len(moved) == len(cps)

    def test_small_cases(self):
        assert [c.as_tuple() for c in enumerate_block_transpositions(2)] == [(0, 1, 2)]
        assert len(list(enumerate_block_transpositions(3))) == 4
        with pytest.raises(InputError):
            list(enumerate_block_transpositions(1))


class TestBonds:
    def test_linear_values(self):
        assert int(linear_bonds(identity_permutation(4))) == 5
        assert int(linear_bonds(Permutation((2, 1, 3)))) == 1
        assert int(linear_bonds(Permutation((4, 3, 2, 1)))) == 0

    def test_circular_values(self):
        assert int(circular_bonds(ExtendedPermutation(tuple(range(7))))) == 7
        assert int(circular_bonds(ExtendedPermutation((0, 1, 4, 5, 2, 3, 6)))) == 4

    def test_bondcount_type(self):
        b = linear_bonds(Permutation((2, 1, 3)))
        assert isinstance(b, BondCount)
        assert b.kind == "linear"
        assert circular_bonds(extend(Permutation((2, 1, 3)))).kind == "circular"

    def test_linear_equals_circular_of_extension(self):
        # independent direct-count oracle on both conventions, exhaustive
        for n in range(1, 8):
            for vals in itertools.permutations(range(1, n + 1)):
                bordered = (0,) + vals + (n + 1,)
                lin = sum(bordered[t + 1] == bordered[t] + 1 for t in range(n + 1))
                ext = (0,) + vals
                circ = sum(
                    ext[(t + 1) % (n + 1)] == (ext[t] + 1) % (n + 1) for t in range(n + 1)
                )
                assert lin == circ
                p = Permutation(vals)
                assert int(linear_bonds(p)) == lin
                assert int(circular_bonds(extend(p))) == circ

    def test_full_count_only_for_identity(self):
        for n in range(1, 6):
            for vals in itertools.permutations(range(1, n + 1)):
                p = Permutation(vals)
                assert (int(linear_bonds(p)) == n + 1) == p.is_identity()


class TestExtendRestrict:
    def test_known_values(self):
        assert extend(Permutation((2, 1, 3))).values == (0, 2, 1, 3)
        assert restrict(ExtendedPermutation((0, 2, 1, 3))).values == (2, 1, 3)
        with pytest.raises(InputError):
            restrict(ExtendedPermutation((1, 0, 2)))

    @given(st.integers(min_value=1, max_value=8).flatmap(perms))
    def test_roundtrip(self, p):
        assert restrict(extend(p)) == p
