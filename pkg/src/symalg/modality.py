"""Basis-vector semantics of the symmetric-algebra modality.

Monomials are multisets of basis vectors of the underlying space.  The
monad unit embeds a vector as a degree-1 monomial, the monad
multiplication multiplies out a monomial of monomials, the monoid
multiplication merges multisets, and the deriving map sends a monomial to
the sum of its partial derivatives (with integer multiplicities for
repeated factors).
"""

from __future__ import annotations

from fractions import Fraction

from .spaces import (
    MonIx, UnitIx, UNIT_IX, monomial, terms, decompose_sum, build_sum,
    direct_sum, sym, tensor, enumerate_basis, rank,
)
from .elements import (
    element, zero_element, singleton, elem_add, elem_scale, elem_sum,
    elem_tensor,
)
from .morphisms import (
    SymF, Eta, Mu, Mult, UnitM, Deriv, Chi, ChiInv, Chi0, Chi0Inv, TableNu,
    apply_basis,
)


def eval_primitive(m, bv):
    if isinstance(m, Eta):
        return singleton(m.cod(), MonIx((bv,)))

    if isinstance(m, UnitM):
        return singleton(m.cod(), MonIx(()))

    if isinstance(m, Mu):
        # A monomial of monomials multiplies out to one merged monomial.
        merged = []
        for inner in bv.parts:
            merged.extend(inner.parts)
        return singleton(m.cod(), monomial(merged))

    if isinstance(m, Mult):
        p, q = _split_monomials(bv, m.dom(), sym(m.a))
        return singleton(m.cod(), monomial(p.parts + q.parts))

    if isinstance(m, SymF):
        return _symf(m, bv)

    if isinstance(m, Deriv):
        return _deriv(m, bv)

    if isinstance(m, Chi):
        return _chi(m, bv)

    if isinstance(m, ChiInv):
        return _chi_inv(m, bv)

    if isinstance(m, Chi0):
        return singleton(m.cod(), MonIx(()))

    if isinstance(m, Chi0Inv):
        return singleton(m.cod(), UNIT_IX)

    if isinstance(m, TableNu):
        return _table_fold(m, bv)

    raise TypeError(f"no evaluation rule for {type(m).__name__}")


def _split_monomials(bv, dom, half):
    from .spaces import split_pair
    a, b = split_pair(bv, half, half)
    return a, b


def _symf(m, bv):
    """S(f) on a monomial: apply f to each factor and expand multilinearly."""
    images = [apply_basis(m.f, p) for p in bv.parts]
    acc = {(): Fraction(1)}
    for img in images:
        nxt = {}
        for prefix, c in acc.items():
            for fbv, fc in img.coeffs:
                key = prefix + (fbv,)
                nxt[key] = nxt.get(key, Fraction(0)) + c * fc
        acc = nxt  # empty when any factor image is zero
    out = {}
    for parts, c in acc.items():
        mono = monomial(parts)
        out[mono] = out.get(mono, Fraction(0)) + c
    return element(m.cod(), out)


def _deriv(m, bv):
    """d on {b_1,...,b_k} = sum_i ({...without b_i}) (x) b_i."""
    sa = sym(m.a)
    pieces = []
    for i, factor in enumerate(bv.parts):
        rest = MonIx(bv.parts[:i] + bv.parts[i + 1:])
        pieces.append(elem_tensor(singleton(sa, rest), singleton(m.a, factor)))
    return elem_sum(m.cod(), pieces)


def _chi(m, bv):
    """p (x) q -> the product monomial over a (+) b, generators embedded."""
    p, q = _two_monomials(bv, m.a, m.b)
    ab = direct_sum(m.a, m.b)
    off = len(terms(m.a))
    parts = []
    for g in p.parts:
        i, inner = decompose_sum(g, m.a)
        parts.append(build_sum(ab, i, inner))
    for g in q.parts:
        j, inner = decompose_sum(g, m.b)
        parts.append(build_sum(ab, off + j, inner))
    return singleton(m.cod(), monomial(parts))


def _chi_inv(m, bv):
    """Split a monomial over a (+) b into its a-part (x) b-part."""
    ab = direct_sum(m.a, m.b)
    off = len(terms(m.a))
    pa, pb = [], []
    for g in bv.parts:
        k, inner = decompose_sum(g, ab)
        if k < off:
            pa.append(build_sum(m.a, k, inner))
        else:
            pb.append(build_sum(m.b, k - off, inner))
    return elem_tensor(singleton(sym(m.a), monomial(pa)),
                       singleton(sym(m.b), monomial(pb)))


def _two_monomials(bv, a, b):
    from .spaces import split_pair
    return split_pair(bv, sym(a), sym(b))


def _table_fold(m, bv):
    """nu on a monomial: fold the multiplication table over the factors."""
    gens = enumerate_basis(m.carrier, 0)
    index = {g: i for i, g in enumerate(gens)}
    acc = m.unit_elem
    for factor in bv.parts:
        acc = _table_mult(m, acc, singleton(m.carrier, factor), index)
    return acc


def _table_mult(m, x, y, index):
    out = zero_element(m.carrier)
    for bx, cx in x.coeffs:
        for by, cy in y.coeffs:
            out = elem_add(out, elem_scale(cx * cy, m.mult_table[index[bx]][index[by]]))
    return out
