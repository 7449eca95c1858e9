"""Space normalization and basis enumeration, checked against counting
oracles computed independently (binomial coefficients, brute-force
products)."""

import math

import pytest
from hypothesis import given, strategies as st

from symalg.spaces import (
    UNIT, ZERO, base, tensor, direct_sum, sym, normalize,
    Sum, Tensor, Sym, Base, Unit, Zero,
    GenIx, MonIx, SumIx, TensorIx, UnitIx, UNIT_IX,
    monomial, weight, enumerate_basis, rank, is_sym_free,
    decompose_sum, build_sum, split_pair, join_pair,
)

B1 = base("x", 1)
B2 = base("y", 2)
B3 = base("z", 3)


def multiset_count(n, k):
    """Monomials of degree exactly k in n generators."""
    return math.comb(n + k - 1, k)


class TestNormalization:
    def test_unit_is_tensor_identity(self):
        assert tensor(UNIT, B2) == B2
        assert tensor(B2, UNIT, UNIT) == B2

    def test_zero_annihilates_tensor(self):
        assert tensor(B2, ZERO) == ZERO
        assert direct_sum(B2, ZERO) == B2

    def test_tensor_distributes_over_sum(self):
        s = tensor(direct_sum(B1, B2), B3)
        assert isinstance(s, Sum)
        assert len(s.summands) == 2
        # row-major order: B1 (x) B3 first
        assert s.summands[0] == tensor(B1, B3)

    def test_tensor_flat_and_associative(self):
        assert tensor(tensor(B1, B2), B3) == tensor(B1, tensor(B2, B3))

    def test_sum_flat_and_associative(self):
        assert (direct_sum(direct_sum(B1, B2), B3)
                == direct_sum(B1, direct_sum(B2, B3)))

    def test_normalize_idempotent(self):
        for s in [tensor(direct_sum(B1, sym(B2)), B3), sym(direct_sum(B1, B2)),
                  tensor(sym(B1), sym(B1))]:
            assert normalize(s) == normalize(normalize(s))


class TestRank:
    def test_rank_oracle(self):
        assert rank(UNIT) == 1
        assert rank(ZERO) == 0
        assert rank(tensor(B2, B3)) == 6
        assert rank(direct_sum(B2, B3)) == 5
        assert rank(tensor(direct_sum(B1, B2), B3)) == 9

    def test_sym_free(self):
        assert is_sym_free(tensor(B2, B3))
        assert not is_sym_free(tensor(B2, sym(B3)))


class TestEnumeration:
    def test_base_counts(self):
        assert len(enumerate_basis(B2, 0)) == 2
        assert len(enumerate_basis(B3, 5)) == 3

    def test_sym_counts_against_binomial_oracle(self):
        for n, space in [(1, B1), (2, B2), (3, B3)]:
            for bound in range(4):
                want = sum(multiset_count(n, k) for k in range(bound + 1))
                assert len(enumerate_basis(sym(space), bound)) == want

    def test_tensor_counts_are_products_of_slices(self):
        # basis of S(B2) (x) B1 at bound w: monomials of weight <= w times 1
        for w in range(4):
            got = len(enumerate_basis(tensor(sym(B2), B1), w))
            want = sum(multiset_count(2, k) for k in range(w + 1))
            assert got == want

    def test_nested_sym_count(self):
        # weight of an outer monomial counts its factors plus their weights
        assert len(enumerate_basis(sym(sym(B1)), 2)) == 4

    def test_prefix_stability(self):
        for space in [sym(B2), tensor(sym(B1), sym(B2)),
                      sym(direct_sum(B1, B2))]:
            prev = enumerate_basis(space, 2)
            nxt = enumerate_basis(space, 3)
            assert nxt[:len(prev)] == prev

    def test_sorted_by_graded_key(self):
        for space in [sym(B2), sym(sym(B1))]:
            bs = enumerate_basis(space, 3)
            keys = [bv.key() for bv in bs]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)

    def test_zero_space_empty(self):
        assert enumerate_basis(ZERO, 5) == []
        assert enumerate_basis(sym(ZERO), 5) == [MonIx(())]


class TestWeight:
    def test_weight_recurrence(self):
        x = GenIx(0)
        assert weight(x) == 0
        assert weight(UNIT_IX) == 0
        m = MonIx((x, x))
        assert weight(m) == 2
        assert weight(MonIx((m,))) == 3  # one factor plus its weight

    def test_monomial_sorts_factors(self):
        a, b = GenIx(0), GenIx(1)
        assert monomial([b, a]) == monomial([a, b])


class TestStructuralHelpers:
    def test_sum_roundtrip(self):
        s = direct_sum(B2, B3)
        for bv in enumerate_basis(s, 0):
            k, inner = decompose_sum(bv, s)
            assert build_sum(s, k, inner) == bv

    def test_pair_roundtrip(self):
        a, b = sym(B1), sym(B2)
        big = tensor(a, b)
        for bv in enumerate_basis(big, 2):
            p, q = split_pair(bv, a, b)
            assert join_pair(a, p, b, q) == bv

    @given(st.lists(st.integers(0, 1), max_size=4),
           st.lists(st.integers(0, 2), max_size=4))
    def test_pair_join_split_random(self, ps, qs):
        a, b = sym(B2), sym(B3)
        p = monomial([GenIx(i) for i in ps])
        q = monomial([GenIx(i) for i in qs])
        bv = join_pair(a, p, b, q)
        assert split_pair(bv, a, b) == (p, q)
