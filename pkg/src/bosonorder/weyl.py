"""Canonical normal-form arithmetic for the boson Weyl algebra.

The algebra is generated by an annihilation operator ``a`` and a creation
operator ``ad`` (written a+ in math) subject to the single relation

    a ad - ad a = 1.

Every element has a unique normal form: a finite sum of monomials
``ad^i a^j`` with coefficients that are exact polynomials in lambda.
``NormalForm`` stores exactly that, so equality is structural.

Products are computed termwise with the closed-form cross rule

    a^j ad^p = sum_k  C(j,k) C(p,k) k!  ad^(p-k) a^(j-k),

which follows from the defining relation by induction.  ``reduce`` is the
slow independent path: it rewrites a free word over {A, C} letter by
letter (AC -> CA + 1) and is used to cross-check the cross rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .poly import Poly

# A free word over the alphabet {A, C}: 'A' = annihilation, 'C' = creation,
# letters written left to right in operator-product order (leftmost acts last).
OperatorWord = str


def _word_letters(word: OperatorWord) -> str:
    bad = set(word) - {"A", "C"}
    if bad:
        raise ValueError(f"operator word may contain only 'A' and 'C': {word!r}")
    return word


def _sort_key(exps: tuple[int, int]) -> tuple[int, int]:
    i, j = exps
    return (i + j, i)


def _as_coeff(c: Poly | Fraction | int) -> Poly:
    if isinstance(c, Poly):
        return c
    return Poly.const(c)


@dataclass(frozen=True, slots=True)
class NormalForm:
    """Finite sum of ad^i a^j with Poly-in-lambda coefficients, canonical."""

    terms: tuple[tuple[tuple[int, int], Poly], ...] = ()

    @staticmethod
    def from_dict(d: dict[tuple[int, int], Poly | Fraction | int]) -> NormalForm:
        items = []
        for (i, j), c in d.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative operator power in {(i, j)}")
            c = _as_coeff(c)
            if c.degree("x") > 0:
                raise ValueError("NormalForm coefficients must not contain x")
            if not c.is_zero:
                items.append(((i, j), c))
        items.sort(key=lambda t: _sort_key(t[0]), reverse=True)
        return NormalForm(tuple(items))

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> NormalForm:
        return NormalForm()

    @staticmethod
    def identity() -> NormalForm:
        return NormalForm.from_dict({(0, 0): 1})

    @staticmethod
    def scalar(c: Poly | Fraction | int) -> NormalForm:
        return NormalForm.from_dict({(0, 0): c})

    @staticmethod
    def monomial(i: int, j: int, c: Poly | Fraction | int = 1) -> NormalForm:
        return NormalForm.from_dict({(i, j): c})

    @staticmethod
    def creation() -> NormalForm:
        return NormalForm.monomial(1, 0)

    @staticmethod
    def annihilation() -> NormalForm:
        return NormalForm.monomial(0, 1)

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, i: int, j: int) -> Poly:
        for exps, c in self.terms:
            if exps == (i, j):
                return c
        return Poly.zero()

    def max_annihilation(self) -> int:
        """Largest power of a appearing in any term (0 for the zero element)."""
        return max((j for (_, j), _ in self.terms), default=0)

    # -- linear structure -----------------------------------------------------

    def __add__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        out = {exps: c for exps, c in self.terms}
        for exps, c in other.terms:
            out[exps] = out.get(exps, Poly.zero()) + c
        return NormalForm.from_dict(out)

    def __neg__(self) -> NormalForm:
        return NormalForm(tuple((exps, -c) for exps, c in self.terms))

    def __sub__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Poly | Fraction | int) -> NormalForm:
        c = _as_coeff(c)
        return NormalForm.from_dict({exps: coeff * c for exps, coeff in self.terms})

    def __mul__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, n: int) -> NormalForm:
        if n < 0:
            raise ValueError("negative power in the Weyl algebra")
        out = NormalForm.identity()
        for _ in range(n):
            out = mul(out, self)
        return out

    # -- serialization ----------------------------------------------------------

    def text(self) -> str:
        """Terms ``P(lambda) ad^i a^j`` joined by `` + ``, (i+j, i) descending.

        Coefficients are parenthesized unless they are a single term with a
        positive sign, so the output re-parses under the CLI grammar.
        """
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms:
            cs = c.pretty()
            if len(c.terms) > 1 or cs.startswith("-"):
                cs = f"({cs})"
            parts.append(f"{cs} ad^{i} a^{j}")
        return " + ".join(parts)

    def to_json_obj(self) -> list[dict]:
        return [
            {"ad": i, "a": j, "c": c.to_json_obj()} for (i, j), c in self.terms
        ]

    def __str__(self) -> str:
        return self.text()


def normal_order_coefficients(nf: NormalForm) -> dict[tuple[int, int], Poly]:
    """Read-only copy of the canonical term map (i, j) -> coefficient."""
    return dict(nf.terms)


def mul(u: NormalForm, v: NormalForm) -> NormalForm:
    """Canonical product via the monomial cross rule; associative."""
    out: dict[tuple[int, int], Poly] = {}
    for (i1, j1), c1 in u.terms:
        for (i2, j2), c2 in v.terms:
            base = c1 * c2
            for k in range(min(j1, i2) + 1):
                w = comb(j1, k) * comb(i2, k) * factorial(k)
                exps = (i1 + i2 - k, j1 + j2 - k)
                prev = out.get(exps, Poly.zero())
                out[exps] = prev + base.scale(w)
    return NormalForm.from_dict(out)


def number_op() -> NormalForm:
    """The number operator ad a."""
    return NormalForm.monomial(1, 1)


def commutator(u: NormalForm, v: NormalForm) -> NormalForm:
    return mul(u, v) - mul(v, u)


def reduce(word: OperatorWord) -> NormalForm:
    """Normal-order a free word by rewriting the leftmost AC pair to CA + 1.

    The relation is confluent, so the result is independent of rewrite
    order; this routine is the slow oracle against which ``mul`` is checked.
    """
    letters = _word_letters(word)
    pending: dict[str, int] = {letters: 1}
    done: dict[tuple[int, int], int] = {}
    while pending:
        w = min(pending)
        c = pending.pop(w)
        pos = w.find("AC")
        if pos < 0:
            # normal-ordered: all C's precede all A's
            key = (w.count("C"), w.count("A"))
            done[key] = done.get(key, 0) + c
            continue
        for rewritten in (w[:pos] + "CA" + w[pos + 2 :], w[:pos] + w[pos + 2 :]):
            pending[rewritten] = pending.get(rewritten, 0) + c
    return NormalForm.from_dict({exps: Poly.const(c) for exps, c in done.items()})


def deg_falling_of(base: NormalForm, shift: int, n: int) -> NormalForm:
    """(base + shift)_{n,lambda} = prod_{i<n} (base + shift - i*lambda).

    Computed left to right in the algebra with lambda symbolic; the order-0
    product is the identity.  Any integer shift is accepted.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    lam = Poly.lam()
    out = NormalForm.identity()
    for i in range(n):
        factor = base + NormalForm.scalar(Poly.const(shift) - lam.scale(i))
        out = mul(out, factor)
    return out
