"""Isomorphism and switching isomorphism for small, sparse signed graphs.

Pendant trees never carry sign information, so the search maps 2-cores onto
each other and only requires the rooted trees hanging at matched core
vertices to agree (compared by AHU encodings). This keeps the search small
even for graphs with dozens of interchangeable pendant vertices.
"""
from __future__ import annotations

from collections import Counter, deque
from typing import Iterator

from .errors import TooLarge
from .graph import SignedGraph, components, two_core
from .switching import switching_equivalent

MAX_ISO_N = 40


def _rooted_code(g: SignedGraph, root: int, blocked: set[int]) -> str:
    # iterative post-order to avoid recursion limits on long paths
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        w = stack.pop()
        for y in g._adj[w]:
            if y in blocked or y == parent[w] or y in parent:
                continue
            parent[y] = w
            order.append(y)
            stack.append(y)
    codes: dict[int, list[str]] = {v: [] for v in order}
    for v in reversed(order):
        code = "(" + "".join(sorted(codes[v])) + ")"
        if parent[v] is not None:
            codes[parent[v]].append(code)
        else:
            return code
    return "()"


def hanging_labels(g: SignedGraph, core: set[int]) -> dict[int, str]:
    """AHU code of the pendant tree rooted at each core vertex."""
    return {v: _rooted_code(g, v, core - {v}) for v in core}


def _tree_code(g: SignedGraph) -> str:
    """Canonical code of an unrooted tree via its centre(s)."""
    if g.n <= 2:
        return f"T{g.n}"
    deg = g.degrees()
    leaves = deque(v for v in range(g.n) if deg[v] <= 1)
    remaining = g.n
    removed = set()
    while remaining > 2:
        for _ in range(len(leaves)):
            v = leaves.popleft()
            removed.add(v)
            remaining -= 1
            for y in g._adj[v]:
                if y not in removed:
                    deg[y] -= 1
                    if deg[y] == 1:
                        leaves.append(y)
    centres = [v for v in range(g.n) if v not in removed]
    return min(_rooted_code(g, c, set()) for c in centres)


def _check_size(*graphs: SignedGraph) -> None:
    for g in graphs:
        if g.n > MAX_ISO_N:
            raise TooLarge(f"isomorphism search limited to n <= {MAX_ISO_N}")


def _profile(g: SignedGraph, core: set[int], labels: dict[int, str]) -> Counter:
    return Counter(
        (sum(1 for y in g._adj[v] if y in core), labels[v]) for v in core
    )


def core_isomorphisms(g1: SignedGraph, g2: SignedGraph) -> Iterator[dict[int, int]]:
    """Yield bijections between 2-cores that extend to isomorphisms of the whole graphs."""
    _check_size(g1, g2)
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return
    c1, c2 = two_core(g1), two_core(g2)
    if len(c1) != len(c2):
        return
    l1, l2 = hanging_labels(g1, c1), hanging_labels(g2, c2)
    if _profile(g1, c1, l1) != _profile(g2, c2, l2):
        return
    if len(components(g1)) > 1 or len(components(g2)) > 1:
        yield from _brute_force(g1, g2)
        return
    if not c1:
        if _tree_code(g1) == _tree_code(g2):
            yield {}
        return
    key1 = {v: (sum(1 for y in g1._adj[v] if y in c1), l1[v]) for v in c1}
    key2 = {v: (sum(1 for y in g2._adj[v] if y in c2), l2[v]) for v in c2}
    # BFS order so every vertex after the first has an already-mapped neighbour
    start = min(c1, key=lambda v: (sum(1 for w in c1 if key1[w] == key1[v]), v))
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for y in sorted(g1._adj[w]):
            if y in c1 and y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int):
        if i == len(order):
            yield dict(mapping)
            return
        v = order[i]
        mapped_nbrs = [y for y in g1._adj[v] if y in mapping]
        if mapped_nbrs:
            pool = {y for y in g2._adj[mapping[mapped_nbrs[0]]] if y in c2}
        else:
            pool = c2
        for w in sorted(pool):
            if w in used or key2[w] != key1[v]:
                continue
            if any((mapping[y] in g2._adj[w]) != (y in g1._adj[v]) for y in mapping):
                continue
            mapping[v] = w
            used.add(w)
            yield from extend(i + 1)
            del mapping[v]
            used.discard(w)

    yield from extend(0)


def _brute_force(g1: SignedGraph, g2: SignedGraph):
    """Whole-graph permutation search; only used for disconnected inputs."""
    import itertools

    if g1.n > 8:
        raise TooLarge("disconnected isomorphism search limited to n <= 8")
    e2 = g2.underlying()
    for perm in itertools.permutations(range(g2.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in e2 for u, v, _ in g1.edges):
            yield dict(enumerate(perm))


def isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Isomorphism of the underlying graphs (signs ignored)."""
    return next(core_isomorphisms(g1, g2), None) is not None


def _signed_core(g: SignedGraph, core: set[int], relabel: dict[int, int]) -> SignedGraph:
    return SignedGraph(
        len(core),
        tuple((relabel[u], relabel[v], s) for u, v, s in g.edges if u in core and v in core),
    )


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True when some relabelling of ``g1`` is switching equivalent to ``g2``."""
    c2 = sorted(two_core(g2))
    index2 = {v: i for i, v in enumerate(c2)}
    target = None
    for phi in core_isomorphisms(g1, g2):
        if not phi:
            return True
        if len(phi) == g1.n and len(c2) < g2.n:
            # whole-graph map from the disconnected fallback
            mapped = SignedGraph(g1.n, tuple((phi[u], phi[v], s) for u, v, s in g1.edges))
            if switching_equivalent(mapped, g2) is not None:
                return True
            continue
        if target is None:
            target = _signed_core(g2, set(c2), index2)
        mapped = _signed_core(g1, set(phi), {v: index2[w] for v, w in phi.items()})
        if switching_equivalent(mapped, target) is not None:
            return True
    return False
