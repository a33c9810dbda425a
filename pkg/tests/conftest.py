import itertools
import random

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

from signed_spectra.graph import SignedGraph


def random_signed_graph(rng: random.Random, n: int, p: float = 0.4, connected: bool = False) -> SignedGraph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        edges = [(u, v, rng.choice((1, -1))) for u, v in pairs if rng.random() < p]
        if connected:
            # random spanning tree first so the graph is connected
            order = list(range(n))
            rng.shuffle(order)
            have = {(min(u, v), max(u, v)) for u, v, _ in edges}
            for i in range(1, n):
                a, b = order[i], order[rng.randrange(i)]
                if (min(a, b), max(a, b)) not in have:
                    have.add((min(a, b), max(a, b)))
                    edges.append((a, b, rng.choice((1, -1))))
        return SignedGraph(n, tuple(edges))


@st.composite
def signed_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    return SignedGraph(n, tuple((u, v, s) for (u, v), s in zip(pairs, mask) if s))


@st.composite
def graphs_with_switching(draw, max_n=8):
    g = draw(signed_graphs(max_n=max_n))
    theta = draw(st.lists(st.sampled_from((1, -1)), min_size=g.n, max_size=g.n))
    return g, theta
