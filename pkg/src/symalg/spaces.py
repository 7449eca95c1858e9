"""Symbolic spaces and their canonical bases.

A space expression is kept in a distributed normal form: a direct sum of
tensor terms, where every tensor factor is atomic (a base space or a Sym
layer).  Under this normal form the monoidal structure is strict: tensoring
is associative/unital on the nose and distributes over direct sums, so the
strict-biproduct bookkeeping needed by the diagram checker holds
definitionally.

Basis vectors are recursive indices.  Sym layers index by canonically
sorted multisets of inner basis vectors, ordered by the graded global
order (weight first, then structure), which keeps truncated enumerations
prefix-stable as the weight bound grows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------------------
# Space expressions
# ---------------------------------------------------------------------------

class SpaceExpr:
    """Base class for space expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Unit(SpaceExpr):
    pass


@dataclass(frozen=True)
class Zero(SpaceExpr):
    pass


@dataclass(frozen=True)
class Base(SpaceExpr):
    name: str
    rank: int

    def __post_init__(self):
        if self.rank <= 0:
            raise ValueError(f"base space rank must be positive, got {self.rank}")


@dataclass(frozen=True)
class Tensor(SpaceExpr):
    factors: tuple  # atoms only, length >= 2 in normal form


@dataclass(frozen=True)
class Sum(SpaceExpr):
    summands: tuple  # tensor terms only, length >= 2 in normal form


@dataclass(frozen=True)
class Sym(SpaceExpr):
    inner: SpaceExpr


UNIT = Unit()
ZERO = Zero()


def _is_atom(s: SpaceExpr) -> bool:
    return isinstance(s, (Base, Sym))


def terms(s: SpaceExpr) -> tuple:
    """The direct-sum terms of a normalized space (empty for Zero)."""
    if isinstance(s, Zero):
        return ()
    if isinstance(s, Sum):
        return s.summands
    return (s,)


def factors(term: SpaceExpr) -> tuple:
    """The tensor factors of a single term (empty for Unit)."""
    if isinstance(term, Unit):
        return ()
    if isinstance(term, Tensor):
        return term.factors
    return (term,)


def _make_term(atoms) -> SpaceExpr:
    atoms = tuple(atoms)
    if not atoms:
        return UNIT
    if len(atoms) == 1:
        return atoms[0]
    return Tensor(atoms)


def _make_sum(ts) -> SpaceExpr:
    ts = tuple(ts)
    if not ts:
        return ZERO
    if len(ts) == 1:
        return ts[0]
    return Sum(ts)


def normalize(s: SpaceExpr) -> SpaceExpr:
    """Distributed normal form: a sum of tensor terms of atoms."""
    if isinstance(s, (Unit, Zero, Base)):
        return s
    if isinstance(s, Sym):
        return Sym(normalize(s.inner))
    if isinstance(s, Sum):
        return direct_sum(*s.summands)
    if isinstance(s, Tensor):
        return tensor(*s.factors)
    raise TypeError(f"not a SpaceExpr: {s!r}")


def tensor(*spaces: SpaceExpr) -> SpaceExpr:
    """Monoidal product, distributed over direct sums (row-major order)."""
    normed = [normalize(x) for x in spaces]
    if any(isinstance(x, Zero) for x in normed):
        return ZERO
    term_lists = [terms(x) for x in normed]
    out = []
    for combo in itertools.product(*term_lists):
        atoms = []
        for t in combo:
            atoms.extend(factors(t))
        out.append(_make_term(atoms))
    return _make_sum(out)


def direct_sum(*spaces: SpaceExpr) -> SpaceExpr:
    """Biproduct; nested sums flatten and Zero summands vanish."""
    out = []
    for x in spaces:
        out.extend(terms(normalize(x)))
    return _make_sum(out)


def sym(s: SpaceExpr) -> SpaceExpr:
    return Sym(normalize(s))


def base(name: str, rank: int) -> SpaceExpr:
    return Base(name, rank)


def is_sym_free(s: SpaceExpr) -> bool:
    if isinstance(s, Sym):
        return False
    if isinstance(s, Tensor):
        return all(is_sym_free(f) for f in s.factors)
    if isinstance(s, Sum):
        return all(is_sym_free(t) for t in s.summands)
    return True


def rank(s: SpaceExpr) -> int:
    """Dimension of a Sym-free space."""
    if isinstance(s, Unit):
        return 1
    if isinstance(s, Zero):
        return 0
    if isinstance(s, Base):
        return s.rank
    if isinstance(s, Tensor):
        r = 1
        for f in s.factors:
            r *= rank(f)
        return r
    if isinstance(s, Sum):
        return sum(rank(t) for t in s.summands)
    raise ValueError(f"rank undefined for {s!r}")


# ---------------------------------------------------------------------------
# Basis vectors
# ---------------------------------------------------------------------------

class BasisVector:
    __slots__ = ()

    def key(self):
        """Graded global order key: weight first, then structure."""
        return (weight(self),) + self._skey()

    def __lt__(self, other):
        return self.key() < other.key()


@dataclass(frozen=True)
class UnitIx(BasisVector):
    def _skey(self):
        return (0,)


@dataclass(frozen=True)
class GenIx(BasisVector):
    index: int  # 0-based generator index

    def _skey(self):
        return (1, self.index)


@dataclass(frozen=True)
class TensorIx(BasisVector):
    parts: tuple

    def _skey(self):
        return (2, tuple(p.key() for p in self.parts))


@dataclass(frozen=True)
class SumIx(BasisVector):
    branch: int
    inner: BasisVector

    def _skey(self):
        return (3, self.branch, self.inner.key())


@dataclass(frozen=True)
class MonIx(BasisVector):
    """A monomial: canonically sorted multiset of inner basis vectors."""

    parts: tuple

    def _skey(self):
        return (4, tuple(p.key() for p in self.parts))


UNIT_IX = UnitIx()


def monomial(parts) -> MonIx:
    return MonIx(tuple(sorted(parts, key=lambda b: b.key())))


@lru_cache(maxsize=None)
def weight(bv: BasisVector) -> int:
    if isinstance(bv, (UnitIx, GenIx)):
        return 0
    if isinstance(bv, TensorIx):
        return sum(weight(p) for p in bv.parts)
    if isinstance(bv, SumIx):
        return weight(bv.inner)
    if isinstance(bv, MonIx):
        return len(bv.parts) + sum(weight(p) for p in bv.parts)
    raise TypeError(f"not a BasisVector: {bv!r}")


# -- structural helpers tying basis vectors to normalized spaces ------------

def decompose_sum(bv: BasisVector, space: SpaceExpr):
    """Split a basis vector of a normalized space into (term index, inner)."""
    ts = terms(space)
    if len(ts) >= 2:
        if not isinstance(bv, SumIx):
            raise ValueError(f"expected SumIx for {space!r}, got {bv!r}")
        return bv.branch, bv.inner
    if len(ts) == 1:
        return 0, bv
    raise ValueError("Zero space has no basis vectors")


def build_sum(space: SpaceExpr, index: int, inner: BasisVector) -> BasisVector:
    ts = terms(space)
    if len(ts) >= 2:
        return SumIx(index, inner)
    if index != 0:
        raise ValueError(f"branch {index} out of range for {space!r}")
    return inner


def decompose_tensor(bv: BasisVector, term: SpaceExpr):
    """Split a term-level basis vector into one index per tensor factor."""
    fs = factors(term)
    if len(fs) == 0:
        if not isinstance(bv, UnitIx):
            raise ValueError(f"expected UnitIx for Unit, got {bv!r}")
        return ()
    if len(fs) == 1:
        return (bv,)
    if not isinstance(bv, TensorIx) or len(bv.parts) != len(fs):
        raise ValueError(f"expected {len(fs)}-part TensorIx for {term!r}, got {bv!r}")
    return bv.parts


def build_tensor(term: SpaceExpr, parts) -> BasisVector:
    parts = tuple(parts)
    fs = factors(term)
    if len(parts) != len(fs):
        raise ValueError(f"need {len(fs)} parts for {term!r}, got {len(parts)}")
    if len(fs) == 0:
        return UNIT_IX
    if len(fs) == 1:
        return parts[0]
    return TensorIx(parts)


def split_pair(bv: BasisVector, a: SpaceExpr, b: SpaceExpr):
    """Split a basis vector of tensor(a, b) into basis vectors of a and b."""
    big = tensor(a, b)
    k, inner = decompose_sum(bv, big)
    nb = len(terms(b))
    i, j = divmod(k, nb)
    term_a = terms(a)[i]
    term_b = terms(b)[j]
    parts = decompose_tensor(inner, terms(big)[k])
    na = len(factors(term_a))
    bva = build_sum(a, i, build_tensor(term_a, parts[:na]))
    bvb = build_sum(b, j, build_tensor(term_b, parts[na:]))
    return bva, bvb


def join_pair(a: SpaceExpr, bva: BasisVector, b: SpaceExpr, bvb: BasisVector) -> BasisVector:
    """Inverse of split_pair."""
    big = tensor(a, b)
    i, inner_a = decompose_sum(bva, a)
    j, inner_b = decompose_sum(bvb, b)
    nb = len(terms(b))
    k = i * nb + j
    parts = decompose_tensor(inner_a, terms(a)[i]) + decompose_tensor(inner_b, terms(b)[j])
    return build_sum(big, k, build_tensor(terms(big)[k], parts))


def term_offset(spaces, i: int) -> int:
    """Term offset of block i inside direct_sum(spaces)."""
    return sum(len(terms(normalize(s))) for s in spaces[:i])


# ---------------------------------------------------------------------------
# Truncated basis enumeration
# ---------------------------------------------------------------------------

def enumerate_basis(space: SpaceExpr, weight_bound: int):
    """All basis vectors of weight <= weight_bound, in global order."""
    if weight_bound < 0:
        raise ValueError("weight_bound must be >= 0")
    space = normalize(space)
    out = sorted(_enum(space, weight_bound), key=lambda b: b.key())
    return out


def _enum(space: SpaceExpr, bound: int):
    if isinstance(space, Zero):
        return
    if isinstance(space, Unit):
        yield UNIT_IX
        return
    if isinstance(space, Base):
        for k in range(space.rank):
            yield GenIx(k)
        return
    if isinstance(space, Sum):
        for i, t in enumerate(space.summands):
            for bv in _enum(t, bound):
                yield SumIx(i, bv)
        return
    if isinstance(space, Tensor):
        for parts in _enum_product(space.factors, bound):
            yield TensorIx(parts)
        return
    if isinstance(space, Sym):
        # Each multiset element costs 1 + its own weight.
        inner = sorted(_enum(space.inner, max(bound - 1, 0)), key=lambda b: b.key())
        yield from _enum_multisets(inner, bound)
        return
    raise TypeError(f"not a SpaceExpr: {space!r}")


def _enum_product(fs, bound):
    if not fs:
        yield ()
        return
    head, rest = fs[0], fs[1:]
    for bv in _enum(head, bound):
        w = weight(bv)
        for tail in _enum_product(rest, bound - w):
            yield (bv,) + tail


def _enum_multisets(inner, bound, start=0):
    # Non-decreasing index sequences keep multisets canonical.
    yield MonIx(())
    stack = [((), start, bound)]
    while stack:
        prefix, lo, budget = stack.pop()
        for i in range(lo, len(inner)):
            cost = 1 + weight(inner[i])
            if cost > budget:
                continue
            mono = prefix + (inner[i],)
            yield MonIx(mono)
            stack.append((mono, i, budget - cost))
