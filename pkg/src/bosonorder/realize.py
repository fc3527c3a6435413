"""Differential-operator realization of the boson algebra on polynomials.

Sending a -> d/dx and ad -> x (multiplication by x) is a faithful
representation of the commutation relation on polynomial spaces, because
Dx - xD = 1.  It gives an identity-verification oracle that is fully
independent of the normal-form cross rule: words are applied letter by
letter, and composite operators are applied factor by factor, so nothing
here depends on ``weyl.mul``.

Two operators built from finitely many x's and D's are equal iff they agree
on the monomials x^0 .. x^mmax for mmax at least the largest annihilation
power involved (each side maps x^m into a single degree, so agreement on
enough monomials pins the operator down exactly).
"""

from __future__ import annotations

from typing import Callable, Optional, Union

from .poly import Poly
from .weyl import NormalForm, OperatorWord, _word_letters

# An operator given either as a free word over {A, C} or as a NormalForm.
RealizedOperator = Union[OperatorWord, NormalForm]

# General linear operator on polynomials, for composite expressions.
PolyOp = Callable[[Poly], Poly]


def apply_word(word: OperatorWord, p: Poly) -> Poly:
    """Apply a free word, rightmost letter first: A -> d/dx, C -> x * ."""
    out = p
    for letter in reversed(_word_letters(word)):
        out = out.derivative_x() if letter == "A" else Poly.x() * out
    return out


def apply_normal_form(nf: NormalForm, p: Poly) -> Poly:
    """Apply sum c(lambda) x^i D^j termwise; lambda passes through as a constant."""
    out = Poly.zero()
    for (i, j), c in nf.terms:
        q = p
        for _ in range(j):
            q = q.derivative_x()
        if q.is_zero:
            continue
        out = out + c * Poly.monomial(0, i) * q
    return out


def apply(op: RealizedOperator, p: Poly) -> Poly:
    """Apply a realized operator (word or NormalForm) to a polynomial."""
    if isinstance(op, NormalForm):
        return apply_normal_form(op, p)
    return apply_word(op, p)


# -- composite operator builders (independent of weyl.mul) ---------------------


def as_poly_op(op: RealizedOperator | PolyOp) -> PolyOp:
    if isinstance(op, NormalForm):
        return lambda p: apply_normal_form(op, p)
    if isinstance(op, str):
        return lambda p: apply_word(op, p)
    return op


def compose(*ops: RealizedOperator | PolyOp) -> PolyOp:
    """Operator product: compose(P, Q)(p) = P(Q(p)) (rightmost acts first)."""
    fns = [as_poly_op(op) for op in ops]

    def run(p: Poly) -> Poly:
        for fn in reversed(fns):
            p = fn(p)
        return p

    return run


def mul_x_pow(r: int) -> PolyOp:
    xr = Poly.monomial(0, r)
    return lambda p: xr * p


def d_pow(k: int) -> PolyOp:
    def run(p: Poly) -> Poly:
        for _ in range(k):
            p = p.derivative_x()
        return p

    return run


def xD(p: Poly) -> Poly:
    return Poly.x() * p.derivative_x()


def shifted_degfall_xD(shift: int, n: int) -> PolyOp:
    """(xD + shift)_{n,lambda} applied as n sequential factors.

    Each factor acts as p -> x p' + (shift - i*lambda) p, applied for
    i = n-1 down to 0 (rightmost factor first).
    """
    lam = Poly.lam()

    def run(p: Poly) -> Poly:
        for i in range(n - 1, -1, -1):
            p = xD(p) + (Poly.const(shift) - lam.scale(i)) * p
        return p

    return run


def linear_combination(parts: list[tuple[Poly, RealizedOperator | PolyOp]]) -> PolyOp:
    """sum coeff * op, with Poly-in-lambda coefficients."""
    fns = [(c, as_poly_op(op)) for c, op in parts]

    def run(p: Poly) -> Poly:
        out = Poly.zero()
        for c, fn in fns:
            out = out + c * fn(p)
        return out

    return run


# -- monomial-action equality ---------------------------------------------------


def first_mismatch_on_monomials(
    lhs: RealizedOperator | PolyOp,
    rhs: RealizedOperator | PolyOp,
    mmax: int,
) -> Optional[tuple[int, Poly, Poly]]:
    """First m in 0..mmax with lhs(x^m) != rhs(x^m), with both results."""
    lf, rf = as_poly_op(lhs), as_poly_op(rhs)
    for m in range(mmax + 1):
        xm = Poly.monomial(0, m)
        left, right = lf(xm), rf(xm)
        if left != right:
            return (m, left, right)
    return None


def operators_equal_on_monomials(
    lhs: RealizedOperator | PolyOp,
    rhs: RealizedOperator | PolyOp,
    mmax: int,
) -> bool:
    """True iff both sides act identically on x^0 .. x^mmax (exact equality)."""
    return first_mismatch_on_monomials(lhs, rhs, mmax) is None


def monomial_margin(*sides: NormalForm) -> int:
    """Default verification bound: max annihilation degree plus a margin of 2."""
    return max((nf.max_annihilation() for nf in sides), default=0) + 2
