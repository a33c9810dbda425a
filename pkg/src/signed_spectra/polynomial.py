"""Dense univariate polynomials with exact coefficients.

Coefficients are stored constant term first. They are normally Python ints,
but any exact ring element works (``Fraction``, or another ``Polynomial`` when
a coefficient depends on a parameter such as the order ``n``).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoRealRootInInterval


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.coeffs
            other = Polynomial([other])
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        return Polynomial([0] * k + list(self.coeffs)) if self.coeffs else Polynomial()

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division over the rationals."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = Fraction(other.leading)
        quot = [Fraction(0)] * max(len(rem) - d, 1)
        for k in range(len(rem) - 1 - d, -1, -1):
            q = rem[k + d] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Polynomial(_integral(quot)), Polynomial(_integral(rem[:d] if d > 0 else []))

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x):
        return self(x)

    def map_coeffs(self, f) -> "Polynomial":
        return Polynomial([f(c) for c in self.coeffs])

    def monic(self) -> "Polynomial":
        lead = Fraction(self.leading)
        return Polynomial(_integral([Fraction(c) / lead for c in self.coeffs]))

    def primitive(self) -> "Polynomial":
        """Scale a rational polynomial to coprime integer coefficients, positive leading term."""
        from math import gcd, lcm

        fr = [Fraction(c) for c in self.coeffs]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in fr]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if g == 0:
            return Polynomial()
        if ints[-1] < 0:
            g = -g
        return Polynomial([c // g for c in ints])

    def to_line(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_line(cls, line: str) -> "Polynomial":
        return cls(int(tok) for tok in line.split())

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if isinstance(c, Polynomial):
                body = f"({c.pretty('n')})"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = "" if (mag == 1 and k > 0) else str(mag)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body + mono))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out

    def pretty(self, var: str = "x") -> str:
        return str(self).replace("x", var)


def _integral(values: Sequence) -> list:
    return [int(v) if isinstance(v, Fraction) and v.denominator == 1 else v for v in values]


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def squarefree(p: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of ``p`` (same real roots, all simple)."""
    g = gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    return (p // g).primitive()


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        # positive rescaling keeps sign variations intact and coefficients small
        seq.append(r.primitive() if r.leading > 0 else -(-r).primitive())
    return seq


def _sign_changes(seq: Sequence[Polynomial], x) -> int:
    signs = []
    for q in seq:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Polynomial, lo, hi, seq=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    seq = seq or sturm_sequence(squarefree(p))
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: every real root lies in ``[-B, B]``."""
    lead = abs(Fraction(p.leading))
    return 1 + max((abs(Fraction(c)) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def largest_real_root(p: Polynomial, lo=None, hi=None, tol: float = 1e-12) -> float:
    """Largest real root of ``p`` inside ``[lo, hi]``.

    Sturm counting isolates the largest root, then exact rational bisection
    narrows it to ``tol`` before a float Newton polish.
    """
    if not p or p.degree < 1:
        raise NoRealRootInInterval("constant polynomial has no roots")
    sf = squarefree(p)
    bound = root_bound(sf)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    if sf(hi) == 0:
        return float(hi)
    seq = sturm_sequence(sf)
    if _sign_changes(seq, lo) - _sign_changes(seq, hi) == 0:
        if sf(lo) == 0:
            return float(lo)
        raise NoRealRootInInterval(f"no real root of {p} in [{float(lo)}, {float(hi)}]")
    a = lo
    b = hi
    # shrink until exactly one root remains in (a, b]
    while True:
        mid = (a + b) / 2
        above = _sign_changes(seq, mid) - _sign_changes(seq, b)
        if above >= 1:
            a = mid
        else:
            b = mid
        if _sign_changes(seq, a) - _sign_changes(seq, b) == 1:
            break
    if sf(b) == 0:
        return float(b)
    # one simple root in (a, b); a itself may be a smaller root, so track the sign at b
    fb_pos = sf(b) > 0
    while b - a > Fraction(tol) / 4:
        mid = (a + b) / 2
        fm = sf(mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == fb_pos:
            b = mid
        else:
            a = mid
    x = float((a + b) / 2)
    d = sf.derivative()
    fx, dx = float(sf(Fraction(x))), float(d(Fraction(x)))
    if dx:
        y = x - fx / dx
        if float(a) <= y <= float(b):
            x = y
    return x


def real_roots(p: Polynomial, tol: float = 1e-12) -> list[float]:
    """All distinct real roots, descending, each to ``tol``."""
    sf = squarefree(p)
    if sf.degree < 1:
        return []
    out = []
    hi = root_bound(sf)
    lo = -hi
    seq = sturm_sequence(sf)
    while _sign_changes(seq, lo) - _sign_changes(seq, hi) > 0:
        r = largest_real_root(sf, lo, hi, tol)
        out.append(r)
        # step just below r while keeping the remaining roots
        step = Fraction(tol)
        cut = Fraction(r) - step
        while _sign_changes(seq, cut) - _sign_changes(seq, hi) > 1:
            step /= 16
            cut = Fraction(r) - step
        hi = cut
    return out
