"""Signed graph data model, structural queries and the ``.sg`` text format.

Vertices are the integers ``0..n-1``. Edges are stored as ``(u, v, s)`` with
``u < v`` and ``s`` in ``{+1, -1}``, sorted ascending.
"""
from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicateEdge, FormatError, SelfLoop, VertexOutOfRange

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        seen = set()
        norm = []
        for e in self.edges:
            u, v, s = _parse_edge(e)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{self.n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u},{v}) given twice")
            seen.add((u, v))
            norm.append((u, v, s))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adj(self) -> tuple[dict[int, int], ...]:
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u][v] = s
            adj[v][u] = s
        return tuple(adj)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv``; ``KeyError`` if absent."""
        return self._adj[u][v]

    def signed_neighbors(self, v: int) -> dict[int, int]:
        return dict(self._adj[v])

    def negative_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, s in self.edges if s < 0]

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        """Same underlying graph with edge signs replaced in edge order."""
        if len(signs) != self.m:
            raise ValueError("need one sign per edge")
        return SignedGraph(self.n, tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs)))

    def underlying(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def __str__(self) -> str:
        body = ", ".join(f"{u}{'+' if s > 0 else '-'}{v}" for u, v, s in self.edges)
        return f"SignedGraph(n={self.n}, [{body}])"


def _parse_edge(e) -> Edge:
    u, v, s = e
    if isinstance(s, str):
        s = {"+": 1, "-": -1, "+1": 1, "-1": -1}.get(s, 0)
    if s not in (1, -1):
        raise ValueError(f"edge sign must be +1 or -1, got {e[2]!r}")
    return int(u), int(v), int(s)


def build(n: int, edges: Iterable) -> SignedGraph:
    return SignedGraph(n, tuple(edges))


def adjacency(g: SignedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = a[v, u] = s
    return a


def from_adjacency(a) -> SignedGraph:
    a = np.asarray(a)
    n = a.shape[0]
    edges = [(i, j, int(a[i, j])) for i in range(n) for j in range(i + 1, n) if a[i, j]]
    return SignedGraph(n, tuple(edges))


def relabel(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return SignedGraph(g.n, tuple((perm[u], perm[v], s) for u, v, s in g.edges))


def induced_subgraph(g: SignedGraph, keep: Iterable[int]) -> tuple[SignedGraph, dict[int, int]]:
    """Induced subgraph on ``keep``, compactly relabelled; returns it with the old->new map."""
    keep = sorted(set(keep))
    for v in keep:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    mapping = {old: new for new, old in enumerate(keep)}
    edges = tuple(
        (mapping[u], mapping[v], s) for u, v, s in g.edges if u in mapping and v in mapping
    )
    return SignedGraph(len(keep), edges), mapping


def delete_vertices(g: SignedGraph, removed: Iterable[int], return_mapping: bool = False):
    removed = set(removed)
    for v in removed:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    sub, mapping = induced_subgraph(g, (v for v in range(g.n) if v not in removed))
    return (sub, mapping) if return_mapping else sub


def add_edges(g: SignedGraph, edges: Iterable) -> SignedGraph:
    return SignedGraph(g.n, g.edges + tuple(edges))


def remove_edges(g: SignedGraph, pairs: Iterable[tuple[int, int]]) -> SignedGraph:
    drop = {(min(u, v), max(u, v)) for u, v in pairs}
    return SignedGraph(g.n, tuple(e for e in g.edges if (e[0], e[1]) not in drop))


def components(g: SignedGraph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            w = queue.popleft()
            for y in g._adj[w]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def cycle_rank(g: SignedGraph) -> int:
    return g.m - g.n + len(components(g))


def cut_edges(g: SignedGraph) -> list[tuple[int, int]]:
    """Bridges of the underlying graph via iterative DFS low-links."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            w, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, w, iter(g.neighbors(y))))
                    advanced = True
                    break
                low[w] = min(low[w], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[w])
                if low[w] > disc[parent]:
                    bridges.append((min(w, parent), max(w, parent)))
    return sorted(bridges)


def two_core(g: SignedGraph, vertices: Iterable[int] | None = None) -> set[int]:
    """Vertices left after repeatedly stripping vertices of degree <= 1."""
    alive = set(range(g.n)) if vertices is None else set(vertices)
    deg = {v: sum(1 for y in g._adj[v] if y in alive) for v in alive}
    queue = deque(v for v in alive if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for y in g._adj[v]:
            if y in alive:
                deg[y] -= 1
                if deg[y] == 1:
                    queue.append(y)
    return alive


@dataclass(frozen=True)
class Cycle:
    """Simple cycle given by its vertex sequence; ``sign`` is the product of edge signs."""

    vertices: tuple[int, ...]
    sign: int

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])]


def cycle_sign(g: SignedGraph, vertices: Sequence[int]) -> int:
    s = 1
    for a, b in zip(vertices, tuple(vertices[1:]) + tuple(vertices[:1])):
        s *= g.sign(a, b)
    return s


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the smallest vertex is first, and orient so the second is below the last."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[1] > vs[-1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def _cycles_within(g: SignedGraph, v: int, allowed: set[int]) -> Iterator[tuple[int, ...]]:
    core = two_core(g, allowed)
    if v not in core:
        return
    path = [v]
    on_path = {v}

    def extend(w: int):
        for y in g._adj[w]:
            if y not in core:
                continue
            if y == v and len(path) >= 3:
                # each cycle is met in both directions; keep one
                if path[1] < path[-1]:
                    yield tuple(path)
            elif y not in on_path:
                path.append(y)
                on_path.add(y)
                yield from extend(y)
                path.pop()
                on_path.discard(y)

    yield from extend(v)


def cycles_through(g: SignedGraph, v: int, vertices: Iterable[int] | None = None) -> list[Cycle]:
    """All simple cycles through ``v`` (optionally inside the induced subgraph on ``vertices``).

    Exponential in the cycle rank; meant for graphs of cycle rank at most 2 or 3.
    """
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    out = []
    for vs in _cycles_within(g, v, allowed):
        vs = canonical_cycle(vs)
        out.append(Cycle(vs, cycle_sign(g, vs)))
    out.sort(key=lambda c: (len(c), c.vertices))
    return out


def all_cycles(g: SignedGraph) -> list[Cycle]:
    found: dict[tuple[int, ...], Cycle] = {}
    core = two_core(g)
    for v in sorted(core):
        for c in cycles_through(g, v, core):
            found.setdefault(c.vertices, c)
    return sorted(found.values(), key=lambda c: (len(c), c.vertices))


# --- .sg text format -------------------------------------------------------

def dumps(g: SignedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> SignedGraph:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise FormatError("empty .sg input")
    header = rows[0]
    if len(header) != 2:
        raise FormatError("header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad header {' '.join(header)!r}") from exc
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for parts in body:
        if len(parts) != 3 or parts[2] not in ("+", "-"):
            raise FormatError(f"bad edge line {' '.join(parts)!r}")
        try:
            edges.append((int(parts[0]), int(parts[1]), 1 if parts[2] == "+" else -1))
        except ValueError as exc:
            raise FormatError(f"bad edge line {' '.join(parts)!r}") from exc
    return SignedGraph(n, tuple(edges))


def read_sg(path) -> SignedGraph:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


def write_sg(g: SignedGraph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(g))


def write_sg_stream(g: SignedGraph, stream: io.TextIOBase) -> None:
    stream.write(dumps(g))


# --- small constructors used throughout tests and the families -------------

def path_graph(n: int, signs: Sequence[int] | None = None) -> SignedGraph:
    signs = signs or [1] * (n - 1)
    return SignedGraph(n, tuple((i, i + 1, s) for i, s in zip(range(n - 1), signs)))


def cycle_graph(n: int, negative: Iterable[int] = ()) -> SignedGraph:
    """``C_n`` on ``0..n-1``; edge ``i`` joins ``i`` and ``i+1 mod n``."""
    neg = set(negative)
    return SignedGraph(n, tuple((i, (i + 1) % n, -1 if i in neg else 1) for i in range(n)))


def star_graph(leaves: int) -> SignedGraph:
    return SignedGraph(leaves + 1, tuple((0, i, 1) for i in range(1, leaves + 1)))
