"""Finitely supported exact-rational elements of a space.

All arithmetic is on `fractions.Fraction`; zero coefficients are never
stored, so structural equality of elements is semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .spaces import SpaceExpr, BasisVector, normalize, join_pair, tensor


class SpaceMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Element:
    space: SpaceExpr
    coeffs: tuple  # sorted ((BasisVector, Fraction), ...), no zeros

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "Element(0)"
        body = " + ".join(f"{c}*{bv}" for bv, c in self.coeffs)
        return f"Element({body})"


def element(space: SpaceExpr, coeffs) -> Element:
    """Build an element from a {basis vector: coefficient} mapping."""
    space = normalize(space)
    items = []
    for bv, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
        c = Fraction(c)
        if c != 0:
            items.append((bv, c))
    items.sort(key=lambda it: it[0].key())
    return Element(space, tuple(items))


def zero_element(space: SpaceExpr) -> Element:
    return Element(normalize(space), ())


def singleton(space: SpaceExpr, bv: BasisVector, c=1) -> Element:
    return element(space, {bv: Fraction(c)})


def elem_add(a: Element, b: Element) -> Element:
    if a.space != b.space:
        raise SpaceMismatchError(f"cannot add elements of {a.space!r} and {b.space!r}")
    out = a.as_dict()
    for bv, c in b.coeffs:
        out[bv] = out.get(bv, Fraction(0)) + c
    return element(a.space, out)


def elem_scale(c, a: Element) -> Element:
    c = Fraction(c)
    if c == 0:
        return zero_element(a.space)
    return Element(a.space, tuple((bv, c * x) for bv, x in a.coeffs))


def elem_sum(space: SpaceExpr, elems) -> Element:
    out = {}
    space = normalize(space)
    for e in elems:
        if e.space != space:
            raise SpaceMismatchError(f"summand in {e.space!r}, expected {space!r}")
        for bv, c in e.coeffs:
            out[bv] = out.get(bv, Fraction(0)) + c
    return element(space, out)


def elem_tensor(a: Element, b: Element) -> Element:
    """Bilinear tensor product, landing in the normalized tensor space."""
    target = tensor(a.space, b.space)
    out = {}
    for bva, ca in a.coeffs:
        for bvb, cb in b.coeffs:
            bv = join_pair(a.space, bva, b.space, bvb)
            out[bv] = out.get(bv, Fraction(0)) + ca * cb
    return element(target, out)
