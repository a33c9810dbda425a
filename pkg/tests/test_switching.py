import itertools
import random

import numpy as np
import pytest
from hypothesis import given

from conftest import graphs_with_switching, random_signed_graph
from signed_spectra.bicyclic import infinity_base, theta_base
from signed_spectra.errors import Balanced, UnderlyingGraphMismatch
from signed_spectra.graph import SignedGraph, all_cycles, build, cycle_graph, is_connected
from signed_spectra.spectra import charpoly_exact, eigenvalues
from signed_spectra.switching import (
    format_switching,
    is_balanced,
    normalize_signature,
    parse_switching,
    switch,
    switching_equivalent,
)

TRIANGLE_NEG = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])


def test_switch_examples():
    assert switch(TRIANGLE_NEG, (1, 1, 1)) == TRIANGLE_NEG
    assert switch(build(2, [(0, 1, 1)]), (-1, 1)) == build(2, [(0, 1, -1)])
    c4 = cycle_graph(4, negative=[1])  # negative edge 1-2
    moved = switch(c4, (1, 1, -1, 1))
    assert moved.negative_edges() == [(2, 3)]


@given(graphs_with_switching())
def test_switch_is_involution(pair):
    g, theta = pair
    assert switch(switch(g, theta), theta) == g


def test_switching_line_format():
    assert format_switching((1, -1, 1)) == "+-+"
    assert parse_switching("+-+\n") == (1, -1, 1)
    with pytest.raises(ValueError):
        parse_switching("+x")


def test_balance_examples():
    cert = is_balanced(cycle_graph(5))
    assert cert and cert.switching == (1,) * 5
    cert = is_balanced(TRIANGLE_NEG)
    assert not cert and cert.cycle.vertices == (0, 1, 2) and cert.cycle.sign == -1
    c4 = cycle_graph(4, negative=[0, 1])
    cert = is_balanced(c4)
    assert cert and -1 in cert.switching
    assert all(s == 1 for _, _, s in switch(c4, cert.switching).edges)


def test_balance_disconnected():
    g = build(6, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, -1)])
    cert = is_balanced(g)
    assert not cert and set(cert.cycle.vertices) == {3, 4, 5}


def test_switching_equivalent_examples():
    positive = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert switching_equivalent(positive, TRIANGLE_NEG) is None
    a, b = cycle_graph(4, negative=[1]), cycle_graph(4, negative=[3])
    theta = switching_equivalent(a, b)
    assert theta is not None and switch(a, theta) == b
    with pytest.raises(UnderlyingGraphMismatch):
        switching_equivalent(a, cycle_graph(5))


@given(graphs_with_switching())
def test_switching_equivalent_recovers(pair):
    g, theta = pair
    h = switch(g, theta)
    found = switching_equivalent(g, h)
    assert found is not None and switch(g, found) == h


@given(graphs_with_switching(max_n=6))
def test_switching_preserves_cycle_signs_and_spectrum(pair):
    g, theta = pair
    h = switch(g, theta)
    assert [c.sign for c in all_cycles(g)] == [c.sign for c in all_cycles(h)]
    assert charpoly_exact(g) == charpoly_exact(h)
    if g.n:
        assert np.allclose(eigenvalues(g).values, eigenvalues(h).values, atol=1e-10)


def test_balance_iff_equivalent_to_positive_exhaustive():
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for k in range(n - 1, len(pairs) + 1):
            for combo in itertools.combinations(pairs, k):
                base = SignedGraph(n, tuple((u, v, 1) for u, v in combo))
                if not is_connected(base):
                    continue
                for signs in itertools.product((1, -1), repeat=k):
                    g = base.with_signs(signs)
                    cert = is_balanced(g)
                    assert bool(cert) == (switching_equivalent(g, base) is not None)
                    if not cert:
                        assert cert.cycle.sign == -1


def test_normalize_infinity_three_negative_edges():
    g = infinity_base(3, 3)  # triangles 0-1-2 and 0-3-4
    g = SignedGraph(5, tuple((u, v, -1 if (u, v) in {(0, 1), (1, 2), (0, 2)} else 1) for u, v, _ in g.edges))
    out = normalize_signature(g)
    assert out.negative_edges() == [(0, 1)]
    assert switching_equivalent(g, out) is not None


def test_normalize_theta_two_negatives_at_branch_vertex():
    g = theta_base(2, 2, 1)  # paths 0-2-1, 0-3-1, 0-1
    g = SignedGraph(4, tuple((u, v, -1 if (u, v) in {(0, 2), (0, 3)} else 1) for u, v, _ in g.edges))
    out = normalize_signature(g)
    assert out.negative_edges() == [(0, 1)]
    assert normalize_signature(out) == out


def test_normalize_balanced_raises():
    with pytest.raises(Balanced):
        normalize_signature(infinity_base(3, 4))


def test_normalize_random_bicyclic():
    from signed_spectra.enumerate_verify import random_unbalanced_bicyclic
    from signed_spectra.bicyclic import base

    rng = random.Random(5)
    for _ in range(200):
        g = random_unbalanced_bicyclic(rng, rng.randint(5, 14))
        out = normalize_signature(g)
        assert switching_equivalent(g, out) is not None
        _, shape = base(g)
        negatives = len(out.negative_edges())
        if shape.kind == "theta":
            assert negatives == 1
        else:
            assert negatives == sum(1 for s in shape.cycle_signs if s < 0)
        assert normalize_signature(out) == out
