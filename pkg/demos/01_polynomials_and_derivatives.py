"""Polynomials over the rationals, built from a free commutative algebra.

The symmetric algebra S(V) on a based space V collects commutative
monomials in the generators of V.  Elements are exact rational linear
combinations of monomials, and the deriving map sends a monomial to the
sum of its pointed deletions: d(x^n) = n * x^(n-1) (x) x.

Run with:  python3 demos/01_polynomials_and_derivatives.py
"""

from fractions import Fraction

from symalg import (
    base, sym, tensor, monomial, enumerate_basis,
    element, singleton, elem_add, GenIx, MonIx,
    Deriv, Mult, apply, apply_basis, compose,
)

# ----------------------------------------------------------------------
# A one-generator space and its polynomial algebra
# ----------------------------------------------------------------------
V = base("x", 1)
SV = sym(V)
x = GenIx(0)

print("basis of S(x) up to weight 3:")
for mono in enumerate_basis(SV, 3):
    print("  ", mono)

# p = x^2 + (3/2) x
p = element(SV, {MonIx((x, x)): Fraction(1), MonIx((x,)): Fraction(3, 2)})
print("\np =", p)

# ----------------------------------------------------------------------
# The deriving map d : S(V) -> S(V) (x) V
# ----------------------------------------------------------------------
d = Deriv(V)
print("d(p) =", apply(d, p))
print("d(x^3) =", apply_basis(d, MonIx((x, x, x))))

# ----------------------------------------------------------------------
# Multiplication is monomial concatenation, extended bilinearly
# ----------------------------------------------------------------------
m = Mult(V)
q = singleton(SV, MonIx((x,)))
from symalg import elem_tensor
print("\n(x) * (x^2 + 3/2 x) =", apply(m, elem_tensor(q, p)))

# The product rule, observed on a single pair of monomials:
# d(x * x^2) = 3 x^2 (x) x, and indeed d after m agrees with the
# two-sided Leibniz expansion checked exhaustively in the law suite.
lhs = compose(m, d)
xy = elem_tensor(q, singleton(SV, MonIx((x, x))))
print("d(x * x^2) =", apply(lhs, xy))
