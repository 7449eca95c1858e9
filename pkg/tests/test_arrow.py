"""Arrow category: squares, functoriality, monad, box product, lifted
modality."""

import pytest

from symalg.spaces import base, sym, tensor, direct_sum, GenIx, MonIx, TensorIx
from symalg.elements import singleton
from symalg.morphisms import (
    Id, ZeroM, Sigma, apply_basis, check_equal, compose,
    linear_map_from_matrix,
)
from symalg.arrow import (
    ArrowObj, ArrowMor, InvalidArrowError, arrow_mor, id_arrow, zero_arrow,
    compose_arrow, add_arrow, arrow_check, sum_obj, zero_obj,
    sbar_obj, sbar_mor, etabar, mubar,
    boxtimes_obj, boxtimes_mor, boxtimes_sigma, boxtimes_unit,
    mbar, ubar, dbar, arrow_seely, arrow_seely_inv, arrow_seely0,
)

B1 = base("x", 1)
B2 = base("y", 2)

ID1 = ArrowObj(Id(B1))
ID2 = ArrowObj(Id(B2))
SWAP = ArrowObj(linear_map_from_matrix(B2, B2, ((0, 1), (1, 0))))
RECT = ArrowObj(linear_map_from_matrix(B2, B1, ((1, 2),)))
ZERO12 = ArrowObj(ZeroM(B1, B2))
SAMPLES = [ID1, ID2, SWAP, RECT, ZERO12]


class TestSquares:
    def test_valid_square_accepted(self):
        f = linear_map_from_matrix(B2, B2, ((2, 0), (0, 2)))
        m = arrow_mor(SWAP, SWAP, f, f)
        assert isinstance(m, ArrowMor)

    def test_broken_square_rejected(self):
        f = linear_map_from_matrix(B2, B2, ((1, 0), (0, 2)))
        with pytest.raises(InvalidArrowError) as exc:
            arrow_mor(SWAP, SWAP, f, f)
        assert exc.value.verdict is not None
        assert exc.value.verdict.witness is not None

    def test_bypass_flag_skips_validation(self):
        f = linear_map_from_matrix(B2, B2, ((1, 0), (0, 2)))
        m = arrow_mor(SWAP, SWAP, f, f, check=False)
        assert isinstance(m, ArrowMor)

    def test_endpoint_mismatch_rejected(self):
        with pytest.raises(InvalidArrowError):
            arrow_mor(ID1, ID2, Id(B1), Id(B1))


class TestLiftedFunctor:
    def test_sbar_on_identity_object_is_one_tensor_phi_after_d(self):
        # applying the lifted identity arrow to x^2 gives 2x (x) x
        sb = sbar_obj(ID1)
        out = apply_basis(sb.phi, MonIx((GenIx(0), GenIx(0))))
        want = singleton(tensor(sym(B1), B1),
                         TensorIx((MonIx((GenIx(0),)), GenIx(0))), 2)
        assert out == want

    def test_sbar_of_zero_arrow_is_zero_postcomposition(self):
        sb = sbar_obj(ZERO12)
        for mono in [MonIx(()), MonIx((GenIx(0),)), MonIx((GenIx(0),) * 2)]:
            assert apply_basis(sb.phi, mono).is_zero()

    def test_functor_preserves_identity(self):
        m = sbar_mor(id_arrow(SWAP))
        v0, v1 = arrow_check(m, id_arrow(sbar_obj(SWAP)), 2)
        assert v0.ok and v1.ok

    def test_functor_preserves_composition(self):
        f = arrow_mor(ID2, SWAP, SWAP.phi, Id(B2))
        g = arrow_mor(SWAP, ID2, Id(B2), SWAP.phi)
        lhs = sbar_mor(compose_arrow(g, f))
        rhs = compose_arrow(sbar_mor(g), sbar_mor(f))
        v0, v1 = arrow_check(lhs, rhs, 2)
        assert v0.ok and v1.ok


class TestMonad:
    @pytest.mark.parametrize("o", SAMPLES)
    def test_unit_laws(self, o):
        sb = sbar_obj(o)
        for lhs in [compose_arrow(mubar(o), etabar(sb)),
                    compose_arrow(mubar(o), sbar_mor(etabar(o)))]:
            v0, v1 = arrow_check(lhs, id_arrow(sb), 2)
            assert v0.ok and v1.ok

    @pytest.mark.parametrize("o", SAMPLES)
    def test_associativity(self, o):
        lhs = compose_arrow(mubar(o), sbar_mor(mubar(o)))
        rhs = compose_arrow(mubar(o), mubar(sbar_obj(o)))
        v0, v1 = arrow_check(lhs, rhs, 1)
        assert v0.ok and v1.ok

    def test_mubar_second_component_substitutes_then_multiplies(self):
        # {{x}} (x) {x} (x) a1 -> x^2 (x) a1
        o = ID1
        m = mubar(o)
        x = GenIx(0)
        from symalg.spaces import join_pair
        ssa, rest = sym(sym(B1)), tensor(sym(B1), B1)
        outer = MonIx((MonIx((x,)),))
        inner = join_pair(sym(B1), MonIx((x,)), B1, x)
        bv = join_pair(ssa, outer, rest, inner)
        out = apply_basis(m.f1, bv)
        want = singleton(tensor(sym(B1), B1),
                         TensorIx((MonIx((x, x)), x)))
        assert out == want


class TestBoxProduct:
    def test_sigma_involution(self):
        for p, q in [(ID1, SWAP), (RECT, ZERO12)]:
            lhs = compose_arrow(boxtimes_sigma(q, p), boxtimes_sigma(p, q))
            v0, v1 = arrow_check(lhs, id_arrow(boxtimes_obj(p, q)), 2)
            assert v0.ok and v1.ok

    def test_strict_associativity_and_units(self):
        p, q, r = ID1, SWAP, RECT
        lhs = boxtimes_obj(boxtimes_obj(p, q), r).phi
        rhs = boxtimes_obj(p, boxtimes_obj(q, r)).phi
        # strict on spaces, equal as maps
        assert (lhs.dom(), lhs.cod()) == (rhs.dom(), rhs.cod())
        assert check_equal(lhs, rhs, 2).ok
        for u in [boxtimes_obj(boxtimes_unit(), q).phi,
                  boxtimes_obj(q, boxtimes_unit()).phi]:
            assert (u.dom(), u.cod()) == (q.phi.dom(), q.phi.cod())
            assert check_equal(u, q.phi, 2).ok

    def test_bifunctoriality(self):
        f = arrow_mor(ID2, SWAP, SWAP.phi, Id(B2))
        g = arrow_mor(SWAP, ID2, Id(B2), SWAP.phi)
        h = id_arrow(ID1)
        lhs = boxtimes_mor(compose_arrow(g, f), h)
        rhs = compose_arrow(boxtimes_mor(g, h), boxtimes_mor(f, h))
        v0, v1 = arrow_check(lhs, rhs, 2)
        assert v0.ok and v1.ok

    def test_sigma_naturality(self):
        f = arrow_mor(ID2, SWAP, SWAP.phi, Id(B2))
        h = id_arrow(ID1)
        lhs = compose_arrow(boxtimes_sigma(SWAP, ID1), boxtimes_mor(f, h))
        rhs = compose_arrow(boxtimes_mor(h, f), boxtimes_sigma(ID2, ID1))
        v0, v1 = arrow_check(lhs, rhs, 2)
        assert v0.ok and v1.ok

    def test_object_column_duplicates_on_identities(self):
        o = boxtimes_obj(ID1, ID1)
        from symalg.spaces import join_pair, build_sum
        bv = join_pair(B1, GenIx(0), B1, GenIx(0))
        out = apply_basis(o.phi, bv)
        assert len(out.coeffs) == 2
        assert all(c == 1 for _, c in out.coeffs)


class TestLiftedModality:
    @pytest.mark.parametrize("o", SAMPLES)
    def test_monoid_laws(self, o):
        sb = sbar_obj(o)
        m, u = mbar(o), ubar(o)
        one = id_arrow(sb)
        cases = [
            (compose_arrow(m, boxtimes_mor(u, one)), one),
            (compose_arrow(m, boxtimes_mor(one, u)), one),
            (compose_arrow(m, boxtimes_mor(m, one)),
             compose_arrow(m, boxtimes_mor(one, m))),
            (compose_arrow(m, boxtimes_sigma(sb, sb)), m),
        ]
        for lhs, rhs in cases:
            v0, v1 = arrow_check(lhs, rhs, 2)
            assert v0.ok and v1.ok

    @pytest.mark.parametrize("o", SAMPLES)
    def test_d_axioms(self, o):
        sb = sbar_obj(o)
        d = dbar(o)
        # constant rule
        v0, v1 = arrow_check(
            compose_arrow(d, ubar(o)),
            zero_arrow(boxtimes_unit(), boxtimes_obj(sb, o)), 2)
        assert v0.ok and v1.ok
        # linear rule
        v0, v1 = arrow_check(
            compose_arrow(d, etabar(o)),
            boxtimes_mor(ubar(o), id_arrow(o)), 2)
        assert v0.ok and v1.ok
        # interchange
        inner = compose_arrow(boxtimes_mor(d, id_arrow(o)), d)
        lhs = compose_arrow(
            boxtimes_mor(id_arrow(sb), boxtimes_sigma(o, o)), inner)
        v0, v1 = arrow_check(lhs, inner, 2)
        assert v0.ok and v1.ok

    def test_dbar_first_component_is_base_derivative(self):
        d = dbar(ID1)
        x = GenIx(0)
        out = apply_basis(d.f0, MonIx((x, x)))
        assert out == singleton(tensor(sym(B1), B1),
                                TensorIx((MonIx((x,)), x)), 2)

    def test_mutated_dbar_fails_interchange(self):
        o = ID2
        d = dbar(o, twist=False)
        sb = sbar_obj(o)
        inner = compose_arrow(boxtimes_mor(d, id_arrow(o)), d)
        lhs = compose_arrow(
            boxtimes_mor(id_arrow(sb), boxtimes_sigma(o, o)), inner)
        v0, v1 = arrow_check(lhs, inner, 2)
        assert v0.ok and not v1.ok
        assert v1.witness is not None


class TestArrowSeely:
    @pytest.mark.parametrize("p,q", [(ID1, ID1), (ID1, SWAP), (RECT, ZERO12)])
    def test_round_trips(self, p, q):
        chi = arrow_seely(p, q)
        inv = arrow_seely_inv(p, q)
        v0, v1 = arrow_check(compose_arrow(inv, chi),
                             id_arrow(boxtimes_obj(sbar_obj(p), sbar_obj(q))), 2)
        assert v0.ok and v1.ok
        v0, v1 = arrow_check(compose_arrow(chi, inv),
                             id_arrow(sbar_obj(sum_obj(p, q))), 2)
        assert v0.ok and v1.ok

    def test_nullary_equals_lifted_unit(self):
        v0, v1 = arrow_check(arrow_seely0(), ubar(zero_obj()), 3)
        assert v0.ok and v1.ok
