"""Eigenvalues, the index, and exact characteristic polynomials of signed graphs.

Two independent routes to the characteristic polynomial are provided: the
Faddeev-LeVerrier trace recurrence on the adjacency matrix, and the signed
Schwenk vertex recursion. Tests pin them against each other.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, CycleRankTooHigh, TooLarge, VertexOutOfRange
from .graph import SignedGraph, adjacency, components, cycle_rank, cycles_through
from .polynomial import Polynomial, largest_real_root

MULTIPLICITY_TOL = 1e-8
SCHWENK_MAX_N = 25


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tol: float = 1e-10

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def index(self) -> float:
        return self.values[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


@dataclass(frozen=True)
class IndexVector:
    value: float
    vector: np.ndarray
    residual: float
    multiple: bool

    def __iter__(self):
        # allows ``lam, x = index(g)``
        yield self.value
        yield self.vector


def _eigh(a: np.ndarray):
    try:
        return np.linalg.eigh(a.astype(float))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure on tiny matrices
        raise ConvergenceFailure(str(exc)) from exc


def eigenvalues(g: SignedGraph) -> Spectrum:
    if g.n < 1:
        raise VertexOutOfRange("spectrum of the empty graph is undefined")
    try:
        vals = np.linalg.eigvalsh(adjacency(g).astype(float))
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc
    return Spectrum(tuple(float(v) for v in vals[::-1]))


def index_value(g: SignedGraph) -> float:
    return eigenvalues(g).index


def _orient(x: np.ndarray) -> np.ndarray:
    for c in x:
        if abs(c) > 1e-12:
            return x if c > 0 else -x
    return x


def index(g: SignedGraph) -> IndexVector:
    """Largest eigenvalue with a unit eigenvector whose first nonzero entry is positive."""
    if g.n < 1:
        raise VertexOutOfRange("spectrum of the empty graph is undefined")
    a = adjacency(g).astype(float)
    vals, vecs = _eigh(a)
    lam = float(vals[-1])
    x = _orient(vecs[:, -1].copy())
    multiple = g.n > 1 and bool(vals[-1] - vals[-2] < MULTIPLICITY_TOL)
    residual = float(np.linalg.norm(a @ x - lam * x))
    return IndexVector(lam, x, residual, multiple)


# --- Faddeev-LeVerrier --------------------------------------------------------

_INT64_HEADROOM = 2**62


def charpoly_exact(g: SignedGraph) -> Polynomial:
    """``det(xI - A)`` over the integers by the Faddeev-LeVerrier recurrence.

    Runs in int64 while a bound on the entries guarantees no overflow and
    falls back to Python integers otherwise; every division is exact.
    """
    n = g.n
    a = adjacency(g)
    maxdeg = max(g.degrees(), default=0)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.zeros((n, n), dtype=np.int64)
    ident = np.eye(n, dtype=np.int64)
    exact = False
    for k in range(1, n + 1):
        if not exact:
            bound = int(np.abs(m).max()) if n else 0
            # the next iterate, its product with A and that product's trace must all fit
            step = bound * max(maxdeg, 1) + abs(coeffs[n - k + 1])
            if step * max(maxdeg, 1) * n >= _INT64_HEADROOM:
                exact = True
                a = a.astype(object)
                m = m.astype(object)
                ident = ident.astype(object)
        m = a.dot(m) + coeffs[n - k + 1] * ident
        tr = int(np.trace(a.dot(m)))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -(tr // k)
    return Polynomial(coeffs)


# --- signed Schwenk recursion -----------------------------------------------

class _Schwenk:
    def __init__(self, g: SignedGraph):
        self.g = g
        self.memo: dict[frozenset[int], Polynomial] = {}

    def phi(self, verts: frozenset[int], pivot: int | None = None) -> Polynomial:
        if not verts:
            return Polynomial([1])
        if pivot is None and verts in self.memo:
            return self.memo[verts]
        g = self.g
        inner_edges = sum(1 for v in verts for y in g._adj[v] if y in verts) // 2
        if inner_edges == 0:
            out = Polynomial.monomial(len(verts))
        else:
            comps = components(g, verts)
            if len(comps) > 1 and pivot is None:
                out = Polynomial([1])
                for c in comps:
                    out = out * self.phi(frozenset(c))
            else:
                v = pivot if pivot is not None else self._choose(verts)
                rest = verts - {v}
                out = self.phi(rest).shift(1)
                for u in g._adj[v]:
                    if u in verts:
                        out = out - self.phi(rest - {u})
                for cyc in cycles_through(g, v, verts):
                    out = out - 2 * cyc.sign * self.phi(verts - set(cyc.vertices))
        if pivot is None:
            self.memo[verts] = out
        return out

    def _choose(self, verts: frozenset[int]) -> int:
        g = self.g
        return min(verts, key=lambda v: (sum(1 for y in g._adj[v] if y in verts), v))


def charpoly_schwenk(g: SignedGraph, v: int = 0) -> Polynomial:
    """Characteristic polynomial by expanding at ``v`` with the signed Schwenk formula.

    Subproblems are memoised on their vertex set; deeper levels expand at a
    minimum-degree vertex.
    """
    if g.n > SCHWENK_MAX_N:
        raise TooLarge(f"Schwenk recursion limited to n <= {SCHWENK_MAX_N}")
    if cycle_rank(g) > 2:
        raise CycleRankTooHigh("Schwenk recursion limited to cycle rank <= 2")
    if g.n == 0:
        return Polynomial([1])
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return _Schwenk(g).phi(frozenset(range(g.n)), pivot=v)


__all__ = [
    "Spectrum",
    "IndexVector",
    "eigenvalues",
    "index",
    "index_value",
    "charpoly_exact",
    "charpoly_schwenk",
    "largest_real_root",
]
