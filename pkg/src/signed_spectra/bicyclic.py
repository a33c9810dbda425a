"""Bicyclic bases, their classification, and the five extremal unbalanced families.

A connected graph with ``n + 1`` edges has a unique pendant-free bicyclic
subgraph (its base). Bases come in three kinds:

* ``infinity`` ``B(p, q)``: two cycles sharing one vertex, ``p >= q >= 3``;
* ``dumbbell`` ``B(p, l, q)``: two disjoint cycles joined by a path of length ``l``;
* ``theta`` ``B(P_k, P_l, P_m)``: three internally disjoint paths, ``k >= l >= m >= 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import NotBicyclic, UnsupportedN
from .graph import SignedGraph, cycle_sign, induced_subgraph, is_connected, two_core
from .polynomial import Polynomial, largest_real_root
from .switching import cycle_sign_of_path

INFINITY, DUMBBELL, THETA = "infinity", "dumbbell", "theta"
MAX_FAMILY_N = 2000


@dataclass(frozen=True)
class BicyclicShape:
    kind: str
    params: tuple[int, ...]
    base_vertices: frozenset[int]
    cycles: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...] = ()
    cycle_signs: tuple[int, ...] = ()

    @property
    def base_size(self) -> int:
        return len(self.base_vertices)

    @property
    def label(self) -> str:
        if self.kind == THETA:
            return "B(P{},P{},P{})".format(*self.params)
        return "B({})".format(",".join(map(str, self.params)))


def _walk(g: SignedGraph, core: set[int], start: int, first: int, branch: set[int]) -> list[int]:
    """Follow degree-2 core vertices from ``start`` through ``first`` until a branch vertex."""
    path = [start, first]
    while path[-1] not in branch:
        prev, cur = path[-2], path[-1]
        nxt = [y for y in g._adj[cur] if y in core and y != prev]
        path.append(nxt[0])
    return path


def base(g: SignedGraph) -> tuple[SignedGraph, BicyclicShape]:
    """Strip pendant trees and classify what remains.

    Returns the base as a compactly relabelled signed graph together with a
    shape whose vertex data refers to the labels of ``g``.
    """
    if not is_connected(g) or g.m != g.n + 1:
        raise NotBicyclic(f"not a connected graph with n+1 edges (n={g.n}, m={g.m})")
    core = two_core(g)
    deg = {v: sum(1 for y in g._adj[v] if y in core) for v in core}
    branch = {v for v, d in deg.items() if d > 2}
    degs = sorted(deg[v] for v in branch)
    if degs == [4]:
        (c,) = branch
        walks = [_walk(g, core, c, y, branch) for y in sorted(y for y in g._adj[c] if y in core)]
        cycles, used = [], set()
        for w in walks:
            if w[1] in used:
                continue
            used.update((w[1], w[-2]))
            cycles.append(tuple(w[:-1]))
        cycles.sort(key=len, reverse=True)
        kind, params, paths = INFINITY, tuple(len(c) for c in cycles), ()
    elif degs == [3, 3]:
        x, y = sorted(branch)
        walks = [_walk(g, core, x, w, branch) for w in sorted(w for w in g._adj[x] if w in core)]
        loops = [w for w in walks if w[-1] == x]
        if loops:
            link = next(w for w in walks if w[-1] == y)
            other = _walk(g, core, y, next(w for w in g._adj[y] if w in core and w != link[-2]), branch)
            cyc_x = tuple(loops[0][:-1])
            cyc_y = tuple(other[:-1])
            cycles = sorted([cyc_x, cyc_y], key=len, reverse=True)
            kind = DUMBBELL
            params = (len(cycles[0]), len(link) - 1, len(cycles[1]))
            paths = (tuple(link),)
        else:
            walks.sort(key=len, reverse=True)
            paths = tuple(tuple(w) for w in walks)
            kind = THETA
            params = tuple(len(w) - 1 for w in walks)
            cycles = [paths[a] + tuple(reversed(paths[b][1:-1])) for a, b in ((0, 1), (0, 2), (1, 2))]
    else:
        raise NotBicyclic(f"unexpected branch degrees {degs}")
    sub, _ = induced_subgraph(g, core)
    cycles = tuple(tuple(c) for c in cycles)
    shape = BicyclicShape(
        kind=kind,
        params=params,
        base_vertices=frozenset(core),
        cycles=cycles,
        paths=paths,
        cycle_signs=tuple(cycle_sign(g, c) for c in cycles),
    )
    return sub, shape


def path_signs(g: SignedGraph, shape: BicyclicShape) -> tuple[int, ...]:
    return tuple(cycle_sign_of_path(g, p) for p in shape.paths)


# --- base constructors --------------------------------------------------------

def infinity_base(p: int, q: int) -> SignedGraph:
    """``B(p, q)``: shared vertex 0, first cycle 0..p-1, second cycle 0,p..p+q-2."""
    if min(p, q) < 3:
        raise ValueError("cycles need length >= 3")
    edges = [(i, (i + 1) % p, 1) for i in range(p)]
    second = [0] + list(range(p, p + q - 1))
    edges += [(a, b, 1) for a, b in zip(second, second[1:] + second[:1])]
    return SignedGraph(p + q - 1, tuple(edges))


def dumbbell_base(p: int, length: int, q: int) -> SignedGraph:
    """``B(p, l, q)``: cycle 0..p-1, path from 0 to p+l-1, second cycle through p+l-1."""
    if min(p, q) < 3 or length < 1:
        raise ValueError("cycles need length >= 3 and the path length >= 1")
    edges = [(i, (i + 1) % p, 1) for i in range(p)]
    link = [0] + list(range(p, p + length))
    edges += [(a, b, 1) for a, b in zip(link, link[1:])]
    y = link[-1]
    second = [y] + list(range(p + length, p + length + q - 1))
    edges += [(a, b, 1) for a, b in zip(second, second[1:] + second[:1])]
    return SignedGraph(p + length + q - 1, tuple(edges))


def theta_base(k: int, l: int, m: int) -> SignedGraph:
    """``B(P_k, P_l, P_m)`` between vertices 0 and 1; internal vertices numbered path by path."""
    lengths = sorted((k, l, m), reverse=True)
    if lengths[2] < 1 or lengths[1] < 2:
        raise ValueError("theta graph needs path lengths >= 1 with at most one of length 1")
    edges = []
    nxt = 2
    for length in lengths:
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        seq = [0] + inner + [1]
        edges += [(a, b, 1) for a, b in zip(seq, seq[1:])]
    return SignedGraph(nxt, tuple(edges))


def base_graphs(max_vertices: int) -> Iterator[tuple[str, tuple[int, ...], SignedGraph]]:
    """Every pendant-free bicyclic graph on at most ``max_vertices`` vertices, up to isomorphism."""
    for p in range(3, max_vertices):
        for q in range(3, p + 1):
            if p + q - 1 <= max_vertices:
                yield INFINITY, (p, q), infinity_base(p, q)
    for p in range(3, max_vertices):
        for q in range(3, p + 1):
            for length in range(1, max_vertices):
                if p + q + length - 1 <= max_vertices:
                    yield DUMBBELL, (p, length, q), dumbbell_base(p, length, q)
    for k in range(2, max_vertices):
        for l in range(2, k + 1):
            for m in range(1, l + 1):
                if k + l + m - 1 <= max_vertices:
                    yield THETA, (k, l, m), theta_base(k, l, m)


# --- pendant trees -----------------------------------------------------------

@lru_cache(maxsize=None)
def rooted_trees(size: int, depth: int) -> tuple[tuple, ...]:
    """Rooted trees with ``size`` non-root vertices and height <= ``depth``.

    A tree is the sorted tuple of its child subtrees.
    """
    if size == 0:
        return ((),)
    if depth == 0:
        return ()
    out = set()
    for first in range(1, size + 1):
        for child in rooted_trees(first - 1, depth - 1):
            for rest in rooted_trees(size - first, depth):
                out.add(tuple(sorted((child,) + rest)))
    return tuple(sorted(out))


def attach_tree(edges: list, root: int, tree: tuple, next_vertex: int) -> int:
    for child in tree:
        v = next_vertex
        edges.append((root, v, 1))
        next_vertex = attach_tree(edges, v, child, next_vertex + 1)
    return next_vertex


def with_pendant_trees(g: SignedGraph, trees: dict[int, tuple]) -> SignedGraph:
    edges = list(g.edges)
    nxt = g.n
    for root in sorted(trees):
        nxt = attach_tree(edges, root, trees[root], nxt)
    return SignedGraph(nxt, tuple(edges))


def unbalanced_signings(g: SignedGraph, kind: str) -> Iterator[SignedGraph]:
    """Representatives of the unbalanced switching classes of a bicyclic graph ``g``."""
    _, shape = base(g)
    if kind == THETA:
        groups = [[min(_edges_of_path(p))] for p in shape.paths]
    else:
        cyc = [min(_edges_of_cycle(c)) for c in shape.cycles]
        groups = [[cyc[0]], [cyc[1]], cyc]
    for neg in groups:
        neg = set(neg)
        yield SignedGraph(g.n, tuple((u, v, -1 if (u, v) in neg else 1) for u, v, _ in g.edges))


def _edges_of_path(path) -> list[tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])]


def _edges_of_cycle(cyc) -> list[tuple[int, int]]:
    cyc = list(cyc)
    return _edges_of_path(cyc + cyc[:1])


def reconstruction_candidates(
    n: int, max_base: int = 8, depth: int = 2, max_attach: int = 2
) -> Iterator[tuple[str, SignedGraph]]:
    """Unbalanced bicyclic graphs on ``n`` vertices: small base plus shallow pendant trees."""
    for kind, params, b in base_graphs(min(max_base, n)):
        extra = n - b.n
        layouts = [{}] if extra == 0 else []
        if extra > 0:
            for k in range(1, max_attach + 1):
                for roots in itertools.combinations(range(b.n), k):
                    for split in _compositions(extra, k):
                        choices = [rooted_trees(s, depth) for s in split]
                        for combo in itertools.product(*choices):
                            layouts.append(dict(zip(roots, combo)))
        for layout in layouts:
            g = with_pendant_trees(b, layout)
            for signed in unbalanced_signings(g, kind):
                yield kind, signed


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# --- the five extremal families ---------------------------------------------

def _pendants(edges: list, root: int, start: int, count: int) -> None:
    edges.extend((root, v, 1) for v in range(start, start + count))


def _family_1(n: int) -> SignedGraph:
    # B(3,3) with one negative triangle; all n-5 pendants on the shared vertex
    edges = [(0, 1, -1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (0, 4, 1), (3, 4, 1)]
    _pendants(edges, 0, 5, n - 5)
    return SignedGraph(n, tuple(edges))


def _family_2(n: int) -> SignedGraph:
    # K4-e (theta B(P2,P2,P1)) with one negative triangle; n-4 pendants on a degree-3 vertex
    edges = [(0, 1, 1), (0, 2, -1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]
    _pendants(edges, 0, 4, n - 4)
    return SignedGraph(n, tuple(edges))


def _family_3(n: int) -> SignedGraph:
    # K4-e with both triangles negative (shared edge negative); n-4 pendants on a degree-3 vertex
    edges = [(0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]
    _pendants(edges, 0, 4, n - 4)
    return SignedGraph(n, tuple(edges))


def _family_4(n: int) -> SignedGraph:
    # B(3,3) with both triangles negative; n-5 pendants on the shared vertex
    edges = [(0, 1, -1), (0, 2, 1), (1, 2, 1), (0, 3, -1), (0, 4, 1), (3, 4, 1)]
    _pendants(edges, 0, 5, n - 5)
    return SignedGraph(n, tuple(edges))


def _family_5(n: int) -> SignedGraph:
    # K4-e with one negative triangle; n-4 pendants on the degree-2 vertex of the positive one
    edges = [(0, 1, 1), (0, 2, 1), (0, 3, -1), (1, 2, 1), (1, 3, 1)]
    _pendants(edges, 2, 4, n - 4)
    return SignedGraph(n, tuple(edges))


_CONSTRUCTORS = {1: _family_1, 2: _family_2, 3: _family_3, 4: _family_4, 5: _family_5}
FAMILY_KINDS = {1: INFINITY, 2: THETA, 3: THETA, 4: INFINITY, 5: THETA}
# smallest order at which the family exists: its bare base
FAMILY_BASE_SIZE = {1: 5, 2: 4, 3: 4, 4: 5, 5: 4}


def construct_family(i: int, n: int) -> SignedGraph:
    if i not in _CONSTRUCTORS:
        raise ValueError(f"family id must be 1..5, got {i}")
    lo = FAMILY_BASE_SIZE[i]
    if not lo <= n <= MAX_FAMILY_N:
        raise UnsupportedN(f"family {i} is built for {lo} <= n <= {MAX_FAMILY_N}")
    return _CONSTRUCTORS[i](n)


def f_polynomial(i: int, n: int) -> Polynomial:
    """The factor of the characteristic polynomial of family ``i`` carrying its index."""
    table = {
        1: [n - 5, 0, -n, 0, 1],
        2: [2 * n - 4, 0, -(n + 1), 0, 1],
        3: [2 * n - 8, 4, -(n + 1), 0, 1],
        4: [-n + 5, -(n - 1), 1, 1],
        5: [n - 4, -(n - 2), -1, 1],
    }
    if i not in table:
        raise ValueError(f"family id must be 1..5, got {i}")
    return Polynomial(table[i])


def family_charpoly(i: int, n: int) -> Polynomial:
    """Closed-form characteristic polynomial of family ``i`` at order ``n``."""
    x = Polynomial.x()
    f = f_polynomial(i, n)
    if i == 1:
        core, shift = (x * x - 1) * f, 6
    elif i in (2, 3):
        core, shift = f, 4
    elif i == 4:
        core, shift = (x + 1) * (x - 1) ** 2 * f, 6
    else:
        core, shift = (x + 2) * (x - 1) * f, 5
    if n >= shift:
        return core.shift(n - shift)
    # below the nominal power of x the core still has enough zero roots
    low = shift - n
    if any(core[k] for k in range(low)):
        raise UnsupportedN(f"closed form for family {i} needs n >= {shift}")
    return Polynomial(core.coeffs[low:])


def family_index(i: int, n: int) -> float:
    return largest_real_root(f_polynomial(i, n))
