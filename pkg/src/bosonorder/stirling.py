"""Degenerate (r-)Stirling families as exact polynomials in lambda.

Each family is defined by a basis expansion; the entry at (n, k) is the
coefficient of the k-th target basis element in the expansion of the n-th
source element:

==========  =============================  ====================
family      expand this                    in this basis
==========  =============================  ====================
S1          (x)_n                          deg_falling
S2          (x)_{n,lam}                    falling
S1u         <x>_n                          deg_rising
rS2 (r)     (x+r)_{n,lam}                  falling
rS1u (r)    <x+r>_n                        deg_rising
rS1 (r)     (x-r)_n                        deg_falling
==========  =============================  ====================

``oracle_value`` computes entries literally from those expansions (via
``bases.expand_in_basis``).  ``value`` is the primary computation path:
for the second-kind families it runs the triangular recurrence

    rS2(n+1, k) = rS2(n, k-1) + (k + r - n*lambda) * rS2(n, k)

and for the first-kind families it is the definitional expansion, since no
independent base recurrence is adopted for them.  Rows are memoized per
(family, r); entries are polynomials in lambda alone, with the out-of-range
convention value 0 for k < 0 or k > n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bases import BasisId, basis_poly, expand_in_basis, shift_x
from .poly import Poly


class FamilyKind(enum.Enum):
    S1_DEG = "S1"
    S2_DEG = "S2"
    S1U_DEG = "S1u"
    R_S2_DEG = "rS2"
    R_S1U_DEG = "rS1u"
    R_S1_DEG = "rS1"

    @property
    def is_r_family(self) -> bool:
        return self in (FamilyKind.R_S2_DEG, FamilyKind.R_S1U_DEG, FamilyKind.R_S1_DEG)


@dataclass(frozen=True, slots=True)
class Family:
    """One Stirling family at a fixed shift r (r = 0 for the plain families)."""

    kind: FamilyKind
    r: int = 0

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        if self.r != 0 and not self.kind.is_r_family:
            raise ValueError(f"family {self.kind.value} does not take r != 0")


@lru_cache(maxsize=None)
def _oracle_row(kind: FamilyKind, r: int, n: int) -> tuple[Poly, ...]:
    """Row n computed literally from the defining basis expansion."""
    if kind is FamilyKind.S1_DEG:
        coeffs = expand_in_basis(basis_poly(BasisId.FALLING, n), BasisId.DEG_FALLING)
    elif kind is FamilyKind.S2_DEG:
        coeffs = expand_in_basis(basis_poly(BasisId.DEG_FALLING, n), BasisId.FALLING)
    elif kind is FamilyKind.S1U_DEG:
        coeffs = expand_in_basis(basis_poly(BasisId.RISING, n), BasisId.DEG_RISING)
    elif kind is FamilyKind.R_S2_DEG:
        p = shift_x(basis_poly(BasisId.DEG_FALLING, n), r)
        coeffs = expand_in_basis(p, BasisId.FALLING)
    elif kind is FamilyKind.R_S1U_DEG:
        p = shift_x(basis_poly(BasisId.RISING, n), r)
        coeffs = expand_in_basis(p, BasisId.DEG_RISING)
    elif kind is FamilyKind.R_S1_DEG:
        p = shift_x(basis_poly(BasisId.FALLING, n), -r)
        coeffs = expand_in_basis(p, BasisId.DEG_FALLING)
    else:  # pragma: no cover
        raise AssertionError(kind)
    return tuple(coeffs)


_SECOND_KIND = (FamilyKind.S2_DEG, FamilyKind.R_S2_DEG)


@lru_cache(maxsize=None)
def _value_row(kind: FamilyKind, r: int, n: int) -> tuple[Poly, ...]:
    """Row n on the primary computation path (single construction per row)."""
    if kind not in _SECOND_KIND:
        return _oracle_row(kind, r, n)
    if n == 0:
        return (Poly.one(),)
    prev = _value_row(kind, r, n - 1)
    lam = Poly.lam()
    row = []
    for k in range(n + 1):
        term = prev[k - 1] if k >= 1 else Poly.zero()
        if k <= n - 1:
            weight = Poly.const(k + r) - lam.scale(n - 1)
            term = term + weight * prev[k]
        row.append(term)
    return tuple(row)


def _entry(rows, f: Family, n: int, k: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return Poly.zero()
    return rows(f.kind, f.r, n)[k]


def value(f: Family, n: int, k: int) -> Poly:
    """Family entry (n, k) as a canonical Poly in lambda; 0 outside 0 <= k <= n."""
    return _entry(_value_row, f, n, k)


def oracle_value(f: Family, n: int, k: int) -> Poly:
    """Entry (n, k) extracted from the defining expansion (independent oracle)."""
    return _entry(_oracle_row, f, n, k)


@dataclass(frozen=True, slots=True)
class StirlingTable:
    """Fully populated triangle 0 <= k <= n <= nmax for one family."""

    family: Family
    nmax: int
    entries: tuple[tuple[Poly, ...], ...]

    def value(self, n: int, k: int) -> Poly:
        if n < 0 or n > self.nmax:
            raise ValueError(f"row {n} outside table (nmax={self.nmax})")
        if k < 0 or k > n:
            return Poly.zero()
        return self.entries[n][k]

    def substitute_lambda(self, lam_value: Fraction) -> StirlingTable:
        """Numeric table with lambda evaluated exactly at a rational value."""
        rows = tuple(
            tuple(cell.substitute("lambda", lam_value) for cell in row)
            for row in self.entries
        )
        return StirlingTable(self.family, self.nmax, rows)

    # -- exports ----------------------------------------------------------

    def to_csv(self) -> str:
        header = "n\\k," + ",".join(str(k) for k in range(self.nmax + 1))
        lines = [header]
        for n, row in enumerate(self.entries):
            cells = [cell.text() for cell in row]
            cells += [""] * (self.nmax - n)
            lines.append(f"{n}," + ",".join(cells))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> list[list[list[dict]]]:
        """Nested arrays (rows, then cells) of the Poly JSON form."""
        return [[cell.to_json_obj() for cell in row] for row in self.entries]

    def to_latex(self) -> str:
        cols = "c|" + "c" * (self.nmax + 1)
        lines = [f"\\begin{{tabular}}{{{cols}}}"]
        head = ["$n \\backslash k$"] + [f"${k}$" for k in range(self.nmax + 1)]
        lines.append(" & ".join(head) + " \\\\")
        lines.append("\\hline")
        for n, row in enumerate(self.entries):
            cells = [f"${cell.latex()}$" for cell in row]
            cells += [""] * (self.nmax - n)
            lines.append(" & ".join([f"${n}$"] + cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"


def table(f: Family, nmax: int) -> StirlingTable:
    """Build the triangle for rows 0..nmax on the primary path."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    rows = tuple(_value_row(f.kind, f.r, n) for n in range(nmax + 1))
    return StirlingTable(f, nmax, rows)
