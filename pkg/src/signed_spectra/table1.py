"""Characteristic polynomials of the extremal bicyclic signed graphs and their competitors.

Each row is ``x**(n - shift)`` times a product of factors whose coefficients
are affine in ``n``. Factors are written highest power first, one token per
coefficient, e.g. ``"1 0 -n 0 n-5"`` is ``x^4 - n x^2 + n - 5``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .polynomial import Polynomial

_COEF = re.compile(r"^([+-]?\d*)n([+-]\d+)?$")


def parse_coefficient(tok: str) -> tuple[int, int]:
    """``"3n-15"`` -> ``(-15, 3)`` as (constant, multiple of n)."""
    m = _COEF.match(tok)
    if m is None:
        return int(tok), 0
    lead, const = m.groups()
    mult = {"": 1, "+": 1, "-": -1}.get(lead)
    if mult is None:
        mult = int(lead)
    return int(const or 0), mult


def parse_factor(text: str) -> list[tuple[int, int]]:
    """Constant-first list of affine coefficients."""
    return [parse_coefficient(t) for t in text.split()][::-1]


@dataclass(frozen=True)
class Table1Row:
    label: str
    shift: int
    factors: tuple[tuple[str, int], ...]

    @cached_property
    def _parsed(self):
        return [(parse_factor(f), k) for f, k in self.factors]

    @property
    def min_n(self) -> int:
        return max(self.shift, 5)

    def core(self, n: int) -> Polynomial:
        """Product of the listed factors at order ``n`` (without the power of x)."""
        out = Polynomial([1])
        for coeffs, mult in self._parsed:
            out = out * Polynomial([c + k * n for c, k in coeffs]) ** mult
        return out

    def evaluate(self, n: int) -> Polynomial:
        if n < self.shift:
            raise ValueError(f"{self.label} needs n >= {self.shift}")
        return self.core(n).shift(n - self.shift)

    def symbolic_core(self) -> Polynomial:
        """Core polynomial whose coefficients are polynomials in n."""
        out = Polynomial([Polynomial([1])])
        for coeffs, mult in self._parsed:
            factor = Polynomial([Polynomial([c, k]) for c, k in coeffs])
            for _ in range(mult):
                out = out * factor
        return out

    def formula(self) -> str:
        parts = [f"x^(n-{self.shift})"]
        for coeffs, mult in self._parsed:
            sym = Polynomial([Polynomial([c, k]) for c, k in coeffs])
            body = "(" + _affine_str(sym) + ")"
            parts.append(body if mult == 1 else f"{body}^{mult}")
        return "".join(parts)


def _affine_str(p: Polynomial) -> str:
    terms = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if not c:
            continue
        cs = c.pretty("n")
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if c.degree == 0 and mono:
            v = c[0]
            cs = "" if v == 1 else ("-" if v == -1 else str(v))
        elif mono:
            cs = f"({cs})"
        terms.append(cs + mono)
    return " + ".join(terms).replace("+ -", "- ")


X_MINUS_1 = ("1 -1", 1)
X_PLUS_1 = ("1 1", 1)

ROWS: tuple[Table1Row, ...] = (
    Table1Row("G1", 6, (("1 0 -1", 1), ("1 0 -n 0 n-5", 1))),
    Table1Row("G2", 4, (("1 0 -n-1 0 2n-4", 1),)),
    Table1Row("G3", 4, (("1 0 -n-1 4 2n-8", 1),)),
    Table1Row("G4", 6, (X_PLUS_1, ("1 -1", 2), ("1 1 -n+1 -n+5", 1))),
    Table1Row("G5", 5, (("1 2", 1), X_MINUS_1, ("1 -1 -n+2 n-4", 1))),
    Table1Row("G6", 6, (X_MINUS_1, ("1 1 -n -n 3n-15 n-5", 1))),
    Table1Row("G7", 6, (X_PLUS_1, ("1 -1 -n n 3n-15 -n+5", 1))),
    Table1Row("G8", 6, (X_MINUS_1, ("1 1 -n -n+4 3n-11 n-5", 1))),
    Table1Row("G9", 5, (X_MINUS_1, ("1 1 -n -n+4 2n-8", 1))),
    Table1Row("G10", 5, (("1 -2", 1), X_PLUS_1, ("1 1 -n+2 -n+4", 1))),
    Table1Row("G11", 7, (("1 -1", 2), X_PLUS_1, ("1 1 -n+1 -n+1 2n-12", 1))),
    Table1Row("G12", 7, (X_MINUS_1, ("1 1", 2), ("1 -1 -n+1 n-1 2n-12", 1))),
    Table1Row("G13", 7, (("1 -1", 2), ("1 2 -n+2 -2n+6 n-3 2n-12", 1))),
    Table1Row("G1^1", 6, (X_MINUS_1, ("1 1 -n -n 2n-9 2n-11", 1))),
    Table1Row("G1^2", 6, (X_MINUS_1, ("1 1 -n -n 4n-23 2n-11", 1))),
    Table1Row("G1^3", 8, (("1 -1", 2), ("1 1", 2), ("1 0 -n+1 0 n-7", 1))),
    Table1Row("G1^4", 6, (X_PLUS_1, ("1 -1 -n n 2n-9 -2n+11", 1))),
    Table1Row("G1^5", 6, (X_PLUS_1, ("1 -1 -n n 4n-23 -2n+11", 1))),
    Table1Row("G1^6", 6, (X_PLUS_1, X_MINUS_1, ("1 0 -n 0 5n-29", 1))),
    Table1Row("G2^1", 6, (("1 0 -n-1 0 3n-7 0 -2n+8", 1),)),
    Table1Row("G2^2", 6, (("1 0 -n-1 0 3n-8 2 -n+5", 1),)),
    Table1Row("G2^3", 6, (("1 0 -n-1 0 4n-14 2n-10 -n+5", 1),)),
    Table1Row("G2^4", 6, (("1 0 -n-1 0 3n-8 -2 -n+5", 1),)),
    Table1Row("G2^5", 6, (("1 0 -n-1 0 4n-14 -2n+10 -n+5", 1),)),
    Table1Row("G2^6", 4, (("1 0 -n-1 0 3n-9", 1),)),
    Table1Row("G2^7", 6, (("1 0 -n-1 0 5n-19 0 -4n+20", 1),)),
    Table1Row("G3^1", 6, (("1 0 -n-1 4 3n-11 -4 -2n+12", 1),)),
    Table1Row("G3^2", 6, (("1 0 -n-1 4 3n-12 -2 -n+6", 1),)),
    Table1Row("G3^3", 6, (("1 0 -n-1 4 4n-18 -2n+10 -n+5", 1),)),
    Table1Row("G3^4", 4, (("1 0 -n-1 4 3n-13", 1),)),
    Table1Row("G3^5", 5, (("1 0 -n-1 4 5n-23 -4n+20", 1),)),
    Table1Row("G4^1", 6, (X_MINUS_1, ("1 1 -n -n+4 2n-5 2n-11", 1))),
    Table1Row("G4^2", 6, (X_MINUS_1, ("1 1 -n -n+4 4n-19 2n-11", 1))),
    Table1Row("G4^3", 8, (("1 -1", 2), ("1 1", 2), ("1 0 -n+1 4 n-7", 1))),
    Table1Row("G4^4", 7, (("1 -1", 2), X_PLUS_1, ("1 1 -n+1 -n+5 4n-24", 1))),
)

BY_LABEL = {row.label: row for row in ROWS}


def row(label: str) -> Table1Row:
    return BY_LABEL[label]
