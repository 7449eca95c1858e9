"""Morphism expressions, the exact evaluator, and the diagram checker.

A MorExpr is a composable expression tree with a declared domain and
codomain.  Evaluation interprets the tree one basis vector at a time and
extends linearly; it is exact and total (no truncation happens during
evaluation -- the weight bound only limits which test points a diagram
check enumerates).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .spaces import (
    SpaceExpr, BasisVector, UNIT, ZERO, UnitIx, GenIx, SumIx,
    normalize, tensor, direct_sum, sym, terms, is_sym_free, rank,
    enumerate_basis, decompose_sum, build_sum, split_pair,
    term_offset,
)
from .elements import (
    Element, SpaceMismatchError, element, zero_element, singleton,
    elem_add, elem_scale, elem_sum, elem_tensor,
)


class MorExpr:
    __slots__ = ()

    def dom(self) -> SpaceExpr:
        raise NotImplementedError

    def cod(self) -> SpaceExpr:
        raise NotImplementedError

    def __matmul__(self, other):  # f @ g = tensor product on maps
        return TensorM(self, other)


class EndpointMismatchError(ValueError):
    pass


def _require(cond, msg):
    if not cond:
        raise EndpointMismatchError(msg)


# ---------------------------------------------------------------------------
# Structural constructors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Id(MorExpr):
    space: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "space", normalize(self.space))

    def dom(self):
        return self.space

    def cod(self):
        return self.space


@dataclass(frozen=True)
class Compose(MorExpr):
    """g after f."""

    g: MorExpr
    f: MorExpr

    def __post_init__(self):
        _require(self.f.cod() == self.g.dom(),
                 f"compose mismatch: cod {self.f.cod()!r} != dom {self.g.dom()!r}")

    def dom(self):
        return self.f.dom()

    def cod(self):
        return self.g.cod()


@dataclass(frozen=True)
class TensorM(MorExpr):
    f: MorExpr
    g: MorExpr

    def dom(self):
        return tensor(self.f.dom(), self.g.dom())

    def cod(self):
        return tensor(self.f.cod(), self.g.cod())


@dataclass(frozen=True)
class SumM(MorExpr):
    """Pointwise biproduct of maps, f (+) g."""

    f: MorExpr
    g: MorExpr

    def dom(self):
        return direct_sum(self.f.dom(), self.g.dom())

    def cod(self):
        return direct_sum(self.f.cod(), self.g.cod())


@dataclass(frozen=True)
class Add(MorExpr):
    f: MorExpr
    g: MorExpr

    def __post_init__(self):
        _require(self.f.dom() == self.g.dom() and self.f.cod() == self.g.cod(),
                 "added maps must share endpoints")

    def dom(self):
        return self.f.dom()

    def cod(self):
        return self.f.cod()


@dataclass(frozen=True)
class ZeroM(MorExpr):
    dom_space: SpaceExpr
    cod_space: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "dom_space", normalize(self.dom_space))
        object.__setattr__(self, "cod_space", normalize(self.cod_space))

    def dom(self):
        return self.dom_space

    def cod(self):
        return self.cod_space


@dataclass(frozen=True)
class Sigma(MorExpr):
    """Symmetry a (x) b -> b (x) a."""

    a: SpaceExpr
    b: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))
        object.__setattr__(self, "b", normalize(self.b))

    def dom(self):
        return tensor(self.a, self.b)

    def cod(self):
        return tensor(self.b, self.a)


@dataclass(frozen=True)
class Inj(MorExpr):
    index: int
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(normalize(s) for s in self.summands))
        _require(0 <= self.index < len(self.summands), "injection index out of range")

    def dom(self):
        return self.summands[self.index]

    def cod(self):
        return direct_sum(*self.summands)


@dataclass(frozen=True)
class Proj(MorExpr):
    index: int
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(normalize(s) for s in self.summands))
        _require(0 <= self.index < len(self.summands), "projection index out of range")

    def dom(self):
        return direct_sum(*self.summands)

    def cod(self):
        return self.summands[self.index]


@dataclass(frozen=True)
class Matrix(MorExpr):
    """Block matrix over biproducts: entry (i, j) maps dom block j to cod block i."""

    entries: tuple  # rows of tuples of MorExpr
    dom_blocks: tuple
    cod_blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "dom_blocks", tuple(normalize(s) for s in self.dom_blocks))
        object.__setattr__(self, "cod_blocks", tuple(normalize(s) for s in self.cod_blocks))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        _require(len(self.entries) == len(self.cod_blocks), "matrix row count mismatch")
        for i, row in enumerate(self.entries):
            _require(len(row) == len(self.dom_blocks), "matrix column count mismatch")
            for j, entry in enumerate(row):
                _require(entry.dom() == self.dom_blocks[j],
                         f"matrix entry ({i},{j}) domain mismatch")
                _require(entry.cod() == self.cod_blocks[i],
                         f"matrix entry ({i},{j}) codomain mismatch")

    def dom(self):
        return direct_sum(*self.dom_blocks)

    def cod(self):
        return direct_sum(*self.cod_blocks)


@dataclass(frozen=True)
class LinearMap(MorExpr):
    """Explicit table of basis-vector images; Sym-free domain only."""

    dom_space: SpaceExpr
    cod_space: SpaceExpr
    images: tuple  # ((BasisVector, Element), ...) covering the whole basis

    def __post_init__(self):
        object.__setattr__(self, "dom_space", normalize(self.dom_space))
        object.__setattr__(self, "cod_space", normalize(self.cod_space))
        object.__setattr__(self, "images", tuple(self.images))
        _require(is_sym_free(self.dom_space), "LinearMap requires a Sym-free domain")
        covered = {bv for bv, _ in self.images}
        full = set(enumerate_basis(self.dom_space, 0))
        _require(covered == full, "LinearMap images must cover the domain basis exactly")
        for _, img in self.images:
            _require(img.space == self.cod_space, "LinearMap image in wrong space")

    def dom(self):
        return self.dom_space

    def cod(self):
        return self.cod_space


# ---------------------------------------------------------------------------
# Sym-modality primitives (semantics in modality.py)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymF(MorExpr):
    """Functor action S(f)."""

    f: MorExpr

    def dom(self):
        return sym(self.f.dom())

    def cod(self):
        return sym(self.f.cod())


@dataclass(frozen=True)
class Eta(MorExpr):
    a: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))

    def dom(self):
        return self.a

    def cod(self):
        return sym(self.a)


@dataclass(frozen=True)
class Mu(MorExpr):
    a: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))

    def dom(self):
        return sym(sym(self.a))

    def cod(self):
        return sym(self.a)


@dataclass(frozen=True)
class Mult(MorExpr):
    a: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))

    def dom(self):
        return tensor(sym(self.a), sym(self.a))

    def cod(self):
        return sym(self.a)


@dataclass(frozen=True)
class UnitM(MorExpr):
    a: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))

    def dom(self):
        return UNIT

    def cod(self):
        return sym(self.a)


@dataclass(frozen=True)
class Deriv(MorExpr):
    a: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))

    def dom(self):
        return sym(self.a)

    def cod(self):
        return tensor(sym(self.a), self.a)


@dataclass(frozen=True)
class Chi(MorExpr):
    a: SpaceExpr
    b: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))
        object.__setattr__(self, "b", normalize(self.b))

    def dom(self):
        return tensor(sym(self.a), sym(self.b))

    def cod(self):
        return sym(direct_sum(self.a, self.b))


@dataclass(frozen=True)
class ChiInv(MorExpr):
    a: SpaceExpr
    b: SpaceExpr

    def __post_init__(self):
        object.__setattr__(self, "a", normalize(self.a))
        object.__setattr__(self, "b", normalize(self.b))

    def dom(self):
        return sym(direct_sum(self.a, self.b))

    def cod(self):
        return tensor(sym(self.a), sym(self.b))


@dataclass(frozen=True)
class Chi0(MorExpr):
    def dom(self):
        return UNIT

    def cod(self):
        return sym(ZERO)


@dataclass(frozen=True)
class Chi0Inv(MorExpr):
    def dom(self):
        return sym(ZERO)

    def cod(self):
        return UNIT


@dataclass(frozen=True)
class TableNu(MorExpr):
    """Structure map of a multiplication-table algebra: fold of the table
    over a monomial, with the unit element on the empty monomial."""

    carrier: SpaceExpr
    mult_table: tuple  # rank x rank of Element
    unit_elem: Element

    def __post_init__(self):
        object.__setattr__(self, "carrier", normalize(self.carrier))
        object.__setattr__(self, "mult_table", tuple(tuple(row) for row in self.mult_table))
        _require(is_sym_free(self.carrier), "table algebra carrier must be Sym-free")
        n = rank(self.carrier)
        _require(len(self.mult_table) == n and all(len(r) == n for r in self.mult_table),
                 "mult_table must be rank x rank")

    def dom(self):
        return sym(self.carrier)

    def cod(self):
        return self.carrier


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def apply(m: MorExpr, v: Element) -> Element:
    """Evaluate m on v, exactly."""
    if v.space != m.dom():
        raise SpaceMismatchError(
            f"element lives in {v.space!r}, morphism expects {m.dom()!r}")
    out = zero_element(m.cod())
    for bv, c in v.coeffs:
        out = elem_add(out, elem_scale(c, apply_basis(m, bv)))
    return out


@lru_cache(maxsize=None)
def apply_basis(m: MorExpr, bv: BasisVector) -> Element:
    """Image of a single domain basis vector; always a finite element."""
    if isinstance(m, Id):
        return singleton(m.space, bv)

    if isinstance(m, Compose):
        return apply(m.g, apply_basis(m.f, bv))

    if isinstance(m, ZeroM):
        return zero_element(m.cod_space)

    if isinstance(m, Add):
        return elem_add(apply_basis(m.f, bv), apply_basis(m.g, bv))

    if isinstance(m, TensorM):
        bva, bvb = split_pair(bv, m.f.dom(), m.g.dom())
        return elem_tensor(apply_basis(m.f, bva), apply_basis(m.g, bvb))

    if isinstance(m, Sigma):
        bva, bvb = split_pair(bv, m.a, m.b)
        return elem_tensor(singleton(m.b, bvb), singleton(m.a, bva))

    if isinstance(m, SumM):
        k, inner = decompose_sum(bv, m.dom())
        na = len(terms(m.f.dom()))
        if k < na:
            res = apply_basis(m.f, build_sum(m.f.dom(), k, inner))
            return _embed(res, m.cod(), 0)
        res = apply_basis(m.g, build_sum(m.g.dom(), k - na, inner))
        return _embed(res, m.cod(), len(terms(m.f.cod())))

    if isinstance(m, Inj):
        res = singleton(m.summands[m.index], bv)
        return _embed(res, m.cod(), term_offset(m.summands, m.index))

    if isinstance(m, Proj):
        k, inner = decompose_sum(bv, m.dom())
        off = term_offset(m.summands, m.index)
        width = len(terms(m.summands[m.index]))
        if off <= k < off + width:
            return singleton(m.cod(), build_sum(m.cod(), k - off, inner))
        return zero_element(m.cod())

    if isinstance(m, Matrix):
        k, inner = decompose_sum(bv, m.dom())
        j, local = _locate_block(m.dom_blocks, k)
        x = build_sum(m.dom_blocks[j], local, inner)
        pieces = []
        for i, row in enumerate(m.entries):
            res = apply_basis(row[j], x)
            pieces.append(_embed(res, m.cod(), term_offset(m.cod_blocks, i)))
        return elem_sum(m.cod(), pieces)

    if isinstance(m, LinearMap):
        for key, img in m.images:
            if key == bv:
                return img
        raise ValueError(f"basis vector {bv!r} missing from LinearMap table")

    from . import modality
    return modality.eval_primitive(m, bv)


def _embed(e: Element, big: SpaceExpr, offset: int) -> Element:
    """Re-index an element of a summand block into the containing sum."""
    out = {}
    for bv, c in e.coeffs:
        j, inner = decompose_sum(bv, e.space)
        out[build_sum(big, offset + j, inner)] = c
    return element(big, out)


def _locate_block(blocks, k):
    for j, s in enumerate(blocks):
        width = len(terms(s))
        if k < width:
            return j, k
        k -= width
    raise ValueError("term index out of range for block structure")


# ---------------------------------------------------------------------------
# Diagram checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    status: str  # "equal" | "counterexample"
    tested_count: int
    weight_bound: int
    witness: BasisVector | None = None
    lhs_value: Element | None = None
    rhs_value: Element | None = None

    @property
    def ok(self) -> bool:
        return self.status == "equal"

    def __repr__(self):
        if self.ok:
            return f"Verdict(equal, tested={self.tested_count}, bound={self.weight_bound})"
        return (f"Verdict(counterexample at {self.witness}, "
                f"lhs={self.lhs_value}, rhs={self.rhs_value})")


def check_equal(lhs: MorExpr, rhs: MorExpr, weight_bound: int) -> Verdict:
    """Compare two maps on every domain basis vector of weight <= bound.

    Both sides are linear, so agreement on the enumerated basis certifies
    equality on its whole span -- exact, not probabilistic.
    """
    _require(lhs.dom() == rhs.dom(), f"domain mismatch: {lhs.dom()!r} vs {rhs.dom()!r}")
    _require(lhs.cod() == rhs.cod(), f"codomain mismatch: {lhs.cod()!r} vs {rhs.cod()!r}")
    basis = enumerate_basis(lhs.dom(), weight_bound)
    for n, bv in enumerate(basis):
        lv = apply_basis(lhs, bv)
        rv = apply_basis(rhs, bv)
        if lv != rv:
            return Verdict("counterexample", tested_count=n + 1,
                           weight_bound=weight_bound, witness=bv,
                           lhs_value=lv, rhs_value=rv)
    return Verdict("equal", tested_count=len(basis), weight_bound=weight_bound)


# ---------------------------------------------------------------------------
# Convenience builders
# ---------------------------------------------------------------------------

def compose(*ms: MorExpr) -> MorExpr:
    """Compose left-to-right in diagram order: compose(f, g) = g after f."""
    out = ms[0]
    for m in ms[1:]:
        out = Compose(m, out)
    return out


def linear_map_from_matrix(dom: SpaceExpr, cod: SpaceExpr, entries) -> LinearMap:
    """Columns are images of the domain basis vectors, in global order."""
    dom = normalize(dom)
    cod = normalize(cod)
    _require(is_sym_free(dom) and is_sym_free(cod),
             "matrix presentation needs Sym-free endpoints")
    dbasis = enumerate_basis(dom, 0)
    cbasis = enumerate_basis(cod, 0)
    rows = [list(r) for r in entries]
    if len(rows) != len(cbasis) or any(len(r) != len(dbasis) for r in rows):
        raise EndpointMismatchError(
            f"need a {len(cbasis)}x{len(dbasis)} matrix, got "
            f"{len(rows)}x{len(rows[0]) if rows else 0}")
    images = []
    for j, dbv in enumerate(dbasis):
        col = {cbasis[i]: Fraction(rows[i][j]) for i in range(len(cbasis))}
        images.append((dbv, element(cod, col)))
    return LinearMap(dom, cod, tuple(images))
