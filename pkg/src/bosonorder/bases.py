"""Factorial-type polynomial bases and conversion into them.

The four non-trivial bases are built from linear factors in x:

* falling      (x)_n          = x(x-1)...(x-n+1)
* rising       <x>_n          = x(x+1)...(x+n-1)
* deg_falling  (x)_{n,lam}    = x(x-lam)(x-2lam)...(x-(n-1)lam)
* deg_rising   <x>_{n,lam}    = x(x+lam)...(x+(n-1)lam) = (-1)^n (-x)_{n,lam}

All are monic of degree exactly n in x, so any polynomial can be expanded in
any of them by leading-coefficient deflation: subtract off one basis element
per degree, top down, with no division.  That O(d^2) conversion is what the
Stirling-family generators are cross-checked against.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import Poly


class BasisId(enum.Enum):
    MONOMIAL = "monomial"
    FALLING = "falling"
    DEG_FALLING = "deg_falling"
    RISING = "rising"
    DEG_RISING = "deg_rising"


def product_with_step(base: Poly, step: Poly, n: int) -> Poly:
    """base (base - step) (base - 2 step) ... (base - (n-1) step); 1 when n=0."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    out = Poly.one()
    for i in range(n):
        out = out * (base - step.scale(i))
    return out


def deg_falling_product(base: Poly, n: int) -> Poly:
    """Degenerate falling factorial of an arbitrary polynomial argument."""
    return product_with_step(base, Poly.lam(), n)


def deg_rising_product(base: Poly, n: int) -> Poly:
    """Degenerate rising factorial of an arbitrary polynomial argument."""
    return product_with_step(base, -Poly.lam(), n)


_STEPS = {
    BasisId.FALLING: Poly.one(),
    BasisId.RISING: -Poly.one(),
    BasisId.DEG_FALLING: Poly.lam(),
    BasisId.DEG_RISING: -Poly.lam(),
}


@lru_cache(maxsize=None)
def basis_poly(b: BasisId, n: int) -> Poly:
    """The n-th basis polynomial; monic of degree exactly n in x."""
    if n < 0:
        raise ValueError("basis index must be nonnegative")
    if b is BasisId.MONOMIAL:
        return Poly.monomial(0, n)
    return product_with_step(Poly.x(), _STEPS[b], n)


def expand_in_basis(p: Poly, b: BasisId) -> list[Poly]:
    """Coefficients c_0..c_d with p = sum c_k * basis_poly(b, k), exactly.

    The c_k are polynomials in lambda alone.  Computed by top-down
    deflation: c_k is the x^k coefficient of the residual, which is then
    cancelled by subtracting c_k * basis_poly(b, k).  Returns [] for the
    zero polynomial.
    """
    d = p.degree("x")
    if d < 0:
        return []
    coeffs: list[Poly] = [Poly.zero()] * (d + 1)
    residual = p
    for k in range(d, -1, -1):
        ck = residual.x_coefficient(k)
        coeffs[k] = ck
        if not ck.is_zero:
            residual = residual - ck * basis_poly(b, k)
    assert residual.is_zero, "deflation must terminate exactly on a monic basis"
    return coeffs


def shift_x(p: Poly, c: int) -> Poly:
    """Substitute x -> x + c (any integer c), expanded to canonical form."""
    out: dict[tuple[int, int], Fraction] = {}
    cf = Fraction(c)
    for (e_lam, e_x), coeff in p.terms:
        for i in range(e_x + 1):
            exps = (e_lam, i)
            out[exps] = out.get(exps, Fraction(0)) + coeff * comb(e_x, i) * cf ** (
                e_x - i
            )
    return Poly.from_dict(out)
