"""Index-monotone graph perturbations and their eigenvector hypothesis checks.

Operations rewire edges while keeping their signs. Each check inspects the
unit index eigenvector (and its negation, since either is an eigenvector)
and reports which sufficient condition for ``lambda(after) >= lambda(before)``
holds.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EdgeCollision,
    EdgeInTriangle,
    EdgeMissing,
    MultipleIndex,
    NotCutEdge,
    NotSubtreeRoot,
    PendantEdge,
    VertexOutOfRange,
)
from .graph import SignedGraph, cut_edges, two_core
from .polynomial import largest_real_root
from .spectra import charpoly_exact, index

WEAK_SLACK = 1e-9
# eigenvector comparisons treated as strict only beyond this margin
STRICT_MARGIN = 1e-6
# entries this close to zero count as zero in weak sign tests
ZERO_TOL = 1e-12


def _check_vertex(g: SignedGraph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")


def relocate_edges(g: SignedGraph, u: int, v: int, targets: Iterable[int]) -> SignedGraph:
    """Replace each edge ``v t`` by ``u t`` with the same sign."""
    targets = list(targets)
    _check_vertex(g, u, v, *targets)
    moved = {}
    for t in targets:
        if not g.has_edge(v, t):
            raise EdgeMissing(f"({v},{t}) is not an edge")
        if t == u or g.has_edge(u, t):
            raise EdgeCollision(f"cannot add ({u},{t})")
        moved[t] = g.sign(v, t)
    if not moved:
        return g
    kept = [(a, b, s) for a, b, s in g.edges if not ({a, b} & {v} and ({a, b} - {v}) <= set(moved))]
    kept += [(u, t, s) for t, s in moved.items()]
    return SignedGraph(g.n, tuple(kept))


def add_negative_edge(g: SignedGraph, u: int, v: int) -> SignedGraph:
    _check_vertex(g, u, v)
    if u == v or g.has_edge(u, v):
        raise EdgeCollision(f"cannot add ({u},{v})")
    return SignedGraph(g.n, g.edges + ((u, v, -1),))


def replace_edge(g: SignedGraph, old: tuple[int, int], new: tuple[int, int], sign: int = 1) -> SignedGraph:
    """``g - old + new`` where the new edge gets ``sign``; the scripted reduction move."""
    a, b = old
    if not g.has_edge(a, b):
        raise EdgeMissing(f"({a},{b}) is not an edge")
    c, d = new
    _check_vertex(g, c, d)
    if c == d or (g.has_edge(c, d) and {c, d} != {a, b}):
        raise EdgeCollision(f"cannot add ({c},{d})")
    kept = [e for e in g.edges if {e[0], e[1]} != {a, b}]
    return SignedGraph(g.n, tuple(kept) + ((c, d, sign),))


def alpha_transform(g: SignedGraph, u: int, v: int) -> SignedGraph:
    """Move every neighbour of ``v`` other than ``u`` over to ``u``; ``v`` ends up pendant at ``u``."""
    _check_vertex(g, u, v)
    if not g.has_edge(u, v):
        raise EdgeMissing(f"({u},{v}) is not an edge")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise PendantEdge(f"({u},{v}) is a pendant edge")
    nu = set(g.neighbors(u))
    others = [w for w in g.neighbors(v) if w != u]
    if nu & set(others):
        raise EdgeInTriangle(f"({u},{v}) lies in a triangle")
    return relocate_edges(g, u, v, others)


def _need_simple(g: SignedGraph):
    iv = index(g)
    if iv.multiple:
        raise MultipleIndex("index eigenvalue is not simple")
    return iv


def check_cut_edge_sign(g: SignedGraph, u: int, v: int) -> bool:
    """``sign(uv) * x_u * x_v >= 0`` for the index eigenvector, ``uv`` a cut edge."""
    _check_vertex(g, u, v)
    if (min(u, v), max(u, v)) not in set(cut_edges(g)):
        raise NotCutEdge(f"({u},{v}) is not a cut edge")
    iv = _need_simple(g)
    x = iv.vector
    return bool(g.sign(u, v) * x[u] * x[v] >= -WEAK_SLACK)


def _orientations(x: np.ndarray):
    yield x
    yield -x


def check_alpha_hypotheses(g: SignedGraph, u: int, v: int) -> str | None:
    """Which sufficient condition for the alpha-transform on ``uv`` holds.

    Returns ``"strict-1"``/``"strict-2"`` (index strictly increases),
    ``"weak-1"``/``"weak-2"`` (index does not decrease) or ``None``.
    Case 1 is for a positive edge with ``x_v <= x_u <= lambda * x_v``; case 2 for a
    negative edge with both entries non-negative.
    """
    alpha_transform(g, u, v)  # eligibility
    iv = _need_simple(g)
    lam = iv.value
    s = g.sign(u, v)
    best = None
    for x in _orientations(iv.vector):
        xu, xv = float(x[u]), float(x[v])
        if s > 0:
            if xv + STRICT_MARGIN < xu < lam * xv - STRICT_MARGIN:
                return "strict-1"
            if xv <= xu + ZERO_TOL and xu <= lam * xv + ZERO_TOL:
                best = "weak-1"
        else:
            if xu > STRICT_MARGIN and xv > STRICT_MARGIN and abs(xu - xv) > STRICT_MARGIN:
                return "strict-2"
            if xu >= -ZERO_TOL and xv >= -ZERO_TOL:
                best = "weak-2"
    return best


def check_relocation_hypotheses(g: SignedGraph, u: int, v: int, targets: Sequence[int]) -> str | None:
    """Condition under which moving the cut edges ``v t`` to ``u`` cannot lower the index.

    ``"pendant-strict"``, ``"pendant-weak"`` or ``"cut-weak"``; ``None`` if none applies.
    """
    if not targets:
        return None
    bridges = set(cut_edges(g))
    if any((min(v, t), max(v, t)) not in bridges for t in targets):
        return None
    iv = _need_simple(g)
    pendant = all(g.degree(t) == 1 for t in targets)
    weak = False
    for x in _orientations(iv.vector):
        xu, xv = float(x[u]), float(x[v])
        if pendant and xu > xv + STRICT_MARGIN and xv > STRICT_MARGIN:
            return "pendant-strict"
        if xu + ZERO_TOL >= xv >= -ZERO_TOL:
            weak = True
    if weak:
        return "pendant-weak" if pendant else "cut-weak"
    return None


def check_path_alpha_hypotheses(g: SignedGraph, path: Sequence[int]) -> tuple[int, int] | None:
    """Sign conditions on a path ``u1 u2 u3 u4`` of the base whose middle vertices have base degree 2.

    When they hold, returns ``(u, v)`` with ``{u, v} = {u2, u3}`` such that the
    alpha-transform moving the edges at ``v`` onto ``u`` cannot lower the index;
    ``u`` is the endpoint with the larger eigenvector entry. Otherwise ``None``.
    """
    u1, u2, u3, u4 = path
    core = two_core(g)
    # u1 and u4 must be the base neighbours, so every other edge at u2, u3 is a cut edge
    if not {u1, u2, u3, u4} <= core or any(sum(1 for y in g._adj[w] if y in core) != 2 for w in (u2, u3)):
        return None
    iv = _need_simple(g)
    for x in _orientations(iv.vector):
        if (
            x[u2] >= -ZERO_TOL
            and x[u3] >= -ZERO_TOL
            and g.sign(u1, u2) * x[u1] >= -ZERO_TOL
            and g.sign(u3, u4) * x[u4] >= -ZERO_TOL
        ):
            return (u3, u2) if x[u2] <= x[u3] else (u2, u3)
    return None


def hanging_tree(g: SignedGraph, root: int) -> list[int]:
    """Vertices of the pendant tree rooted at ``root``, root first.

    For a base vertex this is everything reachable through non-base vertices;
    for a tree vertex it is the part cut off from the base by the edge above ``root``.
    """
    _check_vertex(g, root)
    core = two_core(g)
    if root in core:
        blocked = core - {root}
        parent_side = None
    elif core:
        # the neighbour of root on its unique path to the base
        dist = {w: 0 for w in core}
        queue = deque(core)
        while queue:
            w = queue.popleft()
            for y in g._adj[w]:
                if y not in dist:
                    dist[y] = dist[w] + 1
                    queue.append(y)
        if root not in dist:
            raise NotSubtreeRoot(f"vertex {root} is not connected to a base")
        parent_side = min((y for y in g._adj[root] if dist.get(y, -1) == dist[root] - 1))
        blocked = {parent_side}
    else:
        raise NotSubtreeRoot("graph has no base; pendant trees are undefined")
    seen = [root]
    mark = {root}
    queue = deque([root])
    while queue:
        w = queue.popleft()
        for y in g.neighbors(w):
            if y in mark or y in blocked:
                continue
            mark.add(y)
            seen.append(y)
            queue.append(y)
    return seen


def collapse_tree_to_star(g: SignedGraph, root: int) -> SignedGraph:
    """Replace the pendant tree at ``root`` by a star of positive edges centred at ``root``."""
    tree = hanging_tree(g, root)
    inside = set(tree)
    edges = [e for e in g.edges if not (e[0] in inside and e[1] in inside)]
    edges += [(root, w, 1) for w in tree[1:]]
    return SignedGraph(g.n, tuple(edges))


@dataclass(frozen=True)
class PerturbationReport:
    before: SignedGraph
    after: SignedGraph
    op: str
    hypothesis: str | None
    eigvec_used: dict = field(default_factory=dict)
    lam_before: float = 0.0
    lam_after: float = 0.0

    @property
    def monotone(self) -> bool:
        return self.lam_after >= self.lam_before - WEAK_SLACK

    @property
    def strict_expected(self) -> bool:
        return "strict" in (self.hypothesis or "")

    def as_text(self) -> str:
        rows = [
            ("op", self.op),
            ("n", self.before.n),
            ("m_before", self.before.m),
            ("m_after", self.after.m),
            ("hypothesis", self.hypothesis or "none"),
            ("lambda_before", f"{self.lam_before:.12g}"),
            ("lambda_after", f"{self.lam_after:.12g}"),
            ("delta", f"{self.lam_after - self.lam_before:.12g}"),
            ("monotone", "true" if self.monotone else "false"),
        ]
        rows += [(f"x_{k}", f"{v:.12g}") for k, v in sorted(self.eigvec_used.items())]
        return "\n".join(f"{k}: {v}" for k, v in rows) + "\n"


def perturb(g: SignedGraph, op: str, u: int, v: int | None = None, targets: Sequence[int] = ()) -> PerturbationReport:
    """Apply ``op`` (relocate, alpha, collapse, add-neg-edge) and compare indices."""
    iv = index(g)
    used = {}
    hypothesis = None
    if op == "relocate":
        after = relocate_edges(g, u, v, targets)
        if not iv.multiple:
            hypothesis = check_relocation_hypotheses(g, u, v, targets)
        used = {u: iv.vector[u], v: iv.vector[v]}
    elif op == "alpha":
        after = alpha_transform(g, u, v)
        if (min(u, v), max(u, v)) in set(cut_edges(g)):
            hypothesis = "cut-edge"
        elif not iv.multiple:
            hypothesis = check_alpha_hypotheses(g, u, v)
        used = {u: iv.vector[u], v: iv.vector[v]}
    elif op == "collapse":
        after = collapse_tree_to_star(g, u)
        hypothesis = "tree-collapse"
    elif op == "add-neg-edge":
        after = add_negative_edge(g, u, v)
    else:
        raise ValueError(f"unknown perturbation {op!r}")
    return PerturbationReport(
        before=g,
        after=after,
        op=op,
        hypothesis=hypothesis,
        eigvec_used={k: float(val) for k, val in used.items()},
        lam_before=iv.value,
        lam_after=index(after).value,
    )


def exact_index(g: SignedGraph, tol: float = 1e-12) -> float:
    """Index re-solved from the exact characteristic polynomial."""
    return largest_real_root(charpoly_exact(g), tol=tol)


def strictly_increases(before: SignedGraph, after: SignedGraph, margin: float = WEAK_SLACK) -> bool:
    """``lambda(after) > lambda(before)`` by more than ``margin``; near-ties are re-solved exactly."""
    lo, hi = index(before).value, index(after).value
    if hi - lo > margin:
        return True
    return exact_index(after) - exact_index(before) > margin
