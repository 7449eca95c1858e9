"""Tangent structure on algebras and derivations, and the Kleisli differential.

The tangent bundle of an algebra doubles the carrier and equips A (+) A
with a dual-numbers multiplication: the second copy squares to zero.  A
derivation D lifts to diag(D, D) between doubled carriers.  For Kleisli
maps A -> S(B) the differential combinator produces a map A -> S(B (+) B)
whose second-copy-linear part is the derivative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spaces import (
    SpaceExpr, direct_sum, tensor, sym, normalize, enumerate_basis,
    TensorIx, GenIx,
)
from .elements import Element, zero_element, elem_add, elem_scale
from .morphisms import (
    MorExpr, Id, TensorM, SumM, ZeroM, Proj, Matrix,
    SymF, Eta, Deriv, Chi, apply, apply_basis, compose,
)
from .derivations import (
    SAlgebra, AModule, Derivation, s_algebra, a_module, derivation,
)


@dataclass(frozen=True)
class TangentData:
    base: SAlgebra
    tangent: SAlgebra


def tangent_structure_map(alg: SAlgebra) -> MorExpr:
    """The column [nu . S(p1) ; mult . (nu (x) 1) . (S(p1) (x) p2) . d]."""
    a = alg.carrier
    aa = direct_sum(a, a)
    p1 = Proj(0, (a, a))
    p2 = Proj(1, (a, a))
    first = compose(SymF(p1), alg.nu)
    second = compose(Deriv(aa),
                     TensorM(SymF(p1), p2),
                     TensorM(alg.nu, Id(a)),
                     alg.mult())
    return Matrix(entries=((first,), (second,)),
                  dom_blocks=(sym(aa),),
                  cod_blocks=(a, a))


def tangent_algebra(alg: SAlgebra, bound: int | None = None) -> TangentData:
    aa = direct_sum(alg.carrier, alg.carrier)
    tan = s_algebra("tangent-" + alg.name, aa, tangent_structure_map(alg),
                    bound=bound)
    return TangentData(alg, tan)


def tangent_module_action(module: AModule) -> MorExpr:
    """Dual-numbers action on M (+) M.

    Over the distributed order (A1 (x) M1, A1 (x) M2, A2 (x) M1, A2 (x) M2)
    the action is [[alpha, 0, 0, 0], [0, alpha, alpha, 0]]: the first copy
    acts on both components, the second copy feeds the first component
    into the second and annihilates the rest.
    """
    a = module.algebra.carrier
    m = module.carrier
    am = tensor(a, m)
    al = module.alpha
    z = ZeroM(am, m)
    return Matrix(entries=((al, z, z, z), (z, al, al, z)),
                  dom_blocks=(am, am, am, am),
                  cod_blocks=(m, m))


def tangent_derivation(d: Derivation, bound: int | None = None) -> Derivation:
    """diag(D, D) between the doubled algebra and the doubled module."""
    tan = tangent_algebra(d.algebra, bound=bound).tangent
    mm = direct_sum(d.module.carrier, d.module.carrier)
    module = a_module(tan, mm, tangent_module_action(d.module), bound=bound)
    return derivation(tan, module, SumM(d.d, d.d), bound=bound)


def multiplication_table(alg: SAlgebra):
    """The induced multiplication evaluated on all generator pairs."""
    from .spaces import join_pair
    a = alg.carrier
    gens = enumerate_basis(a, 0)
    m = alg.mult()
    return tuple(tuple(apply_basis(m, join_pair(a, g, a, h)) for h in gens)
                 for g in gens)


# ---------------------------------------------------------------------------
# Kleisli maps and the differential combinator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KleisliMap:
    """A map A -> S(B) stored by generator images."""

    dom: SpaceExpr       # Sym-free
    cod_base: SpaceExpr  # B; the actual codomain is S(B)
    images: tuple        # ((BasisVector, Element of S(B)), ...)

    def image_of(self, bv) -> Element:
        for b, e in self.images:
            if b == bv:
                return e
        raise KeyError(bv)


def kleisli_map(dom: SpaceExpr, cod_base: SpaceExpr, images) -> KleisliMap:
    dom = normalize(dom)
    cod_base = normalize(cod_base)
    target = sym(cod_base)
    pairs = tuple(images.items() if isinstance(images, dict) else images)
    covered = {bv for bv, _ in pairs}
    full = set(enumerate_basis(dom, 0))
    if covered != full:
        raise ValueError("images must cover the domain basis exactly")
    for _, e in pairs:
        if e.space != target:
            raise ValueError(f"image lies in {e.space!r}, expected {target!r}")
    return KleisliMap(dom, cod_base, pairs)


def kleisli_apply(f: KleisliMap, x: Element) -> Element:
    out = zero_element(sym(f.cod_base))
    for bv, c in x.coeffs:
        out = elem_add(out, elem_scale(c, f.image_of(bv)))
    return out


def kleisli_add(f: KleisliMap, g: KleisliMap) -> KleisliMap:
    if f.dom != g.dom or f.cod_base != g.cod_base:
        raise ValueError("kleisli sum endpoint mismatch")
    images = [(bv, elem_add(e, g.image_of(bv))) for bv, e in f.images]
    return KleisliMap(f.dom, f.cod_base, tuple(images))


def kleisli_diff(f: KleisliMap) -> KleisliMap:
    """Differential combinator: postcompose with chi . (1 (x) eta) . d.

    The result maps A into S(B (+) B); first-copy generators carry the
    point, the single second-copy generator in each monomial carries the
    derivative direction.
    """
    b = f.cod_base
    post = compose(Deriv(b), TensorM(Id(sym(b)), Eta(b)), Chi(b, b))
    images = tuple((bv, apply(post, e)) for bv, e in f.images)
    return KleisliMap(f.dom, direct_sum(b, b), images)


def monomial_power_map(k: int) -> KleisliMap:
    """e1 |-> x^k as a Kleisli map on one generator."""
    from .spaces import base, MonIx
    from .elements import singleton
    e = base("e", 1)
    x = base("x", 1)
    return kleisli_map(e, x, {GenIx(0): singleton(sym(x), MonIx((GenIx(0),) * k))})


def xy_map() -> KleisliMap:
    """e1 |-> x * y as a Kleisli map into two generators."""
    from .spaces import base, MonIx
    from .elements import singleton
    e = base("e", 1)
    b = base("xy", 2)
    mono = MonIx((GenIx(0), GenIx(1)))
    return kleisli_map(e, b, {GenIx(0): singleton(sym(b), mono)})
