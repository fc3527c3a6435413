"""Exact sparse polynomial arithmetic in the two variables lambda and x.

A polynomial is a finite map from exponent pairs ``(e_lam, e_x)`` to
rational coefficients (``fractions.Fraction``).  Everything is exact:
no floating point appears anywhere, so equality of canonical forms is a
reliable identity test.

Canonical form:

* zero coefficients are never stored (the zero polynomial is the empty map);
* terms are kept sorted in descending graded-lex order on
  ``(e_lam + e_x, e_lam, e_x)``, which makes serialization bit-stable.

``lambda`` is the degeneracy parameter of the factorial sequences built on
top of this module; ``x`` is the formal variable they live in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Exact rational scalar: arbitrary-precision, always in lowest terms with a
# positive denominator (fractions.Fraction guarantees both invariants).
Rational = Fraction

LAMBDA = "lambda"
X = "x"

_LAMBDA_NAMES = frozenset({"lambda", "λ", "l"})
_X_NAMES = frozenset({"x"})


def _canon_var(var: str) -> str:
    if var in _LAMBDA_NAMES:
        return LAMBDA
    if var in _X_NAMES:
        return X
    raise ValueError(f"unknown variable {var!r}; expected one of {{lambda, x}}")


def _term_key(exps: tuple[int, int]) -> tuple[int, int, int]:
    e_lam, e_x = exps
    return (e_lam + e_x, e_lam, e_x)


@dataclass(frozen=True, slots=True)
class Poly:
    """Immutable canonical sparse polynomial over the rationals in (lambda, x)."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...] = ()

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_dict(d: dict[tuple[int, int], Fraction | int]) -> Poly:
        """Build a canonical Poly from an exponent->coefficient mapping."""
        items = []
        for (e_lam, e_x), c in d.items():
            if e_lam < 0 or e_x < 0:
                raise ValueError(f"negative exponent in {(e_lam, e_x)}")
            c = Fraction(c)
            if c != 0:
                items.append(((e_lam, e_x), c))
        items.sort(key=lambda t: _term_key(t[0]), reverse=True)
        return Poly(tuple(items))

    @staticmethod
    def zero() -> Poly:
        return Poly()

    @staticmethod
    def one() -> Poly:
        return Poly.const(1)

    @staticmethod
    def const(c: Fraction | int) -> Poly:
        return Poly.from_dict({(0, 0): Fraction(c)})

    @staticmethod
    def lam() -> Poly:
        """The variable lambda."""
        return Poly.from_dict({(1, 0): Fraction(1)})

    @staticmethod
    def x() -> Poly:
        """The variable x."""
        return Poly.from_dict({(0, 1): Fraction(1)})

    @staticmethod
    def monomial(e_lam: int, e_x: int, c: Fraction | int = 1) -> Poly:
        return Poly.from_dict({(e_lam, e_x): Fraction(c)})

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: str) -> int:
        """Max exponent of ``var``; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        idx = 0 if _canon_var(var) == LAMBDA else 1
        return max(exps[idx] for exps, _ in self.terms)

    def coefficient(self, e_lam: int, e_x: int) -> Fraction:
        for exps, c in self.terms:
            if exps == (e_lam, e_x):
                return c
        return Fraction(0)

    def x_coefficient(self, k: int) -> Poly:
        """The coefficient of x^k, as a polynomial in lambda alone."""
        return Poly.from_dict(
            {(e_lam, 0): c for (e_lam, e_x), c in self.terms if e_x == k}
        )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        out = {exps: c for exps, c in self.terms}
        for exps, c in other.terms:
            out[exps] = out.get(exps, Fraction(0)) + c
        return Poly.from_dict(out)

    def __neg__(self) -> Poly:
        return Poly(tuple((exps, -c) for exps, c in self.terms))

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Poly | Fraction | int) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in other.terms:
                exps = (a1 + a2, b1 + b2)
                out[exps] = out.get(exps, Fraction(0)) + c1 * c2
        return Poly.from_dict(out)

    def __rmul__(self, other: Fraction | int) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Fraction | int) -> Poly:
        c = Fraction(c)
        if c == 0:
            return Poly.zero()
        return Poly(tuple((exps, coeff * c) for exps, coeff in self.terms))

    # -- calculus and substitution ------------------------------------------

    def derivative_x(self) -> Poly:
        """Formal partial derivative with respect to x (lambda is constant)."""
        out = {}
        for (e_lam, e_x), c in self.terms:
            if e_x > 0:
                out[(e_lam, e_x - 1)] = c * e_x
        return Poly.from_dict(out)

    def substitute(self, var: str, value: Fraction | int) -> Poly:
        """Evaluate ``var`` at an exact rational value; exact in the other variable."""
        v = _canon_var(var)
        value = Fraction(value)
        out: dict[tuple[int, int], Fraction] = {}
        for (e_lam, e_x), c in self.terms:
            if v == LAMBDA:
                exps, scale = (0, e_x), value**e_lam
            else:
                exps, scale = (e_lam, 0), value**e_x
            out[exps] = out.get(exps, Fraction(0)) + c * scale
        return Poly.from_dict(out)

    # -- serialization -------------------------------------------------------

    def text(self) -> str:
        """Deterministic text form: ``c * λ^a * x^b`` terms joined by `` + ``.

        Terms appear in descending graded-lex order; coefficients print as
        ``num/den`` with ``/den`` omitted when the denominator is 1.
        """
        if not self.terms:
            return "0"
        parts = []
        for (e_lam, e_x), c in self.terms:
            factors = [str(c)]
            if e_lam:
                factors.append(f"λ^{e_lam}")
            if e_x:
                factors.append(f"x^{e_x}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def to_json_obj(self) -> list[dict]:
        """JSON form: ``[{"c": "num/den", "l": a, "x": b}, ...]`` in text() order."""
        return [
            {"c": str(c), "l": e_lam, "x": e_x} for (e_lam, e_x), c in self.terms
        ]

    def pretty(self, lam: str = "lambda", xname: str = "x") -> str:
        """Human-readable signed form, constants first (ascending graded-lex).

        Examples: ``1 - lambda``, ``3/2 lambda^2``, ``-2 + x``.  The output
        re-parses under the CLI expression grammar.
        """
        if not self.terms:
            return "0"
        mono_first = sorted(self.terms, key=lambda t: _term_key(t[0]))
        chunks: list[str] = []
        for (e_lam, e_x), c in mono_first:
            factors = []
            if e_lam:
                factors.append(lam if e_lam == 1 else f"{lam}^{e_lam}")
            if e_x:
                factors.append(xname if e_x == 1 else f"{xname}^{e_x}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = " ".join(factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def latex(self) -> str:
        return self.pretty(lam="\\lambda")

    def __str__(self) -> str:
        return self.text()
