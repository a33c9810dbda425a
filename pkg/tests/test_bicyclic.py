import math
import random

import pytest

from signed_spectra.bicyclic import (
    DUMBBELL,
    FAMILY_KINDS,
    INFINITY,
    THETA,
    base,
    base_graphs,
    construct_family,
    dumbbell_base,
    f_polynomial,
    family_charpoly,
    family_index,
    infinity_base,
    rooted_trees,
    theta_base,
    unbalanced_signings,
    with_pendant_trees,
)
from signed_spectra.errors import NotBicyclic, UnsupportedN
from signed_spectra.graph import build, cycle_graph, is_connected
from signed_spectra.iso import isomorphic, switching_isomorphic
from signed_spectra.polynomial import Polynomial
from signed_spectra.spectra import charpoly_exact, index_value
from signed_spectra.switching import is_balanced, switch, switching_equivalent
from signed_spectra.table1 import ROWS, parse_coefficient, row

X = Polynomial.x()


def test_base_infinity_with_pendants():
    g = with_pendant_trees(infinity_base(3, 3), {0: ((), (), (), ())})
    core, shape = base(g)
    assert shape.kind == INFINITY and shape.params == (3, 3) and core.n == 5
    assert shape.label == "B(3,3)"


def test_base_dumbbell_bare():
    g = dumbbell_base(3, 2, 3)
    core, shape = base(g)
    assert shape.kind == DUMBBELL and shape.params == (3, 2, 3) and core == g


def test_base_theta_with_pendant_path():
    g = with_pendant_trees(theta_base(2, 2, 1), {2: (((),),)})
    core, shape = base(g)
    assert shape.kind == THETA and shape.params == (2, 2, 1) and core.n == 4


def test_base_rejects_non_bicyclic():
    with pytest.raises(NotBicyclic):
        base(cycle_graph(5))
    with pytest.raises(NotBicyclic):
        base(build(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1), (1, 3, 1), (2, 3, 1)]))


def test_base_graphs_are_distinct_bicyclic():
    graphs = [g for _, _, g in base_graphs(8)]
    for g in graphs:
        assert is_connected(g) and g.m == g.n + 1 and min(g.degrees()) >= 2
    for i, g in enumerate(graphs):
        for h in graphs[i + 1 :]:
            assert not isomorphic(g, h)


def test_rooted_tree_counts():
    # rooted trees with k non-root vertices: 1, 1, 2, 4, 9, 20
    assert [len(rooted_trees(k, k)) for k in range(6)] == [1, 1, 2, 4, 9, 20]
    assert len(rooted_trees(3, 1)) == 1


@pytest.mark.parametrize("g", [infinity_base(4, 3), dumbbell_base(3, 1, 3), theta_base(3, 2, 2)])
def test_unbalanced_signings_are_unbalanced_and_distinct(g):
    _, shape = base(g)
    reps = list(unbalanced_signings(g, shape.kind))
    assert len(reps) == 3
    assert all(not is_balanced(r) for r in reps)
    for i, r in enumerate(reps):
        for s in reps[i + 1 :]:
            assert switching_equivalent(r, s) is None


def test_parse_coefficient():
    assert parse_coefficient("3n-15") == (-15, 3)
    assert parse_coefficient("-n+5") == (5, -1)
    assert parse_coefficient("n") == (0, 1)
    assert parse_coefficient("-7") == (-7, 0)


def test_table_rows_shape():
    assert len(ROWS) == 35
    for r in ROWS:
        for n in (10, 12, 36):
            p = r.evaluate(n)
            assert p.degree == n and p.leading == 1
            assert p[n - 1] == 0 and p[n - 2] == -(n + 1)


def test_table_row_examples():
    n = 10
    assert row("G2").evaluate(n) == X**6 * (X**4 - 11 * X**2 + 16)
    assert row("G1").evaluate(n) == X**4 * (X**2 - 1) * (X**4 - 10 * X**2 + 5)
    assert row("G1^3").evaluate(n) == X**2 * (X - 1) ** 2 * (X + 1) ** 2 * (X**4 - 9 * X**2 + 3)


def test_table_symbolic_core_matches_numeric():
    for r in ROWS:
        sym = r.symbolic_core()
        for n in (9, 17):
            assert Polynomial([c(n) for c in sym.coeffs]) == r.core(n)


def test_f_polynomial_examples():
    assert f_polynomial(1, 36) == X**4 - 36 * X**2 + 31
    assert f_polynomial(4, 36) == X**3 + X**2 - 35 * X - 31
    assert f_polynomial(3, 8) == X**4 - 9 * X**2 + 4 * X + 8
    assert f_polynomial(5, 10) == X**3 - X**2 - 8 * X + 6


@pytest.mark.parametrize("i", range(1, 6))
def test_family_matches_table_and_closed_form(i):
    for n in range(7, 31):
        g = construct_family(i, n)
        assert g.n == n and g.m == n + 1 and is_connected(g)
        assert not is_balanced(g)
        phi = charpoly_exact(g)
        assert phi == row(f"G{i}").evaluate(n) == family_charpoly(i, n)
        assert base(g)[1].kind == FAMILY_KINDS[i]


def test_family_kinds():
    assert [FAMILY_KINDS[i] for i in range(1, 6)] == [INFINITY, THETA, THETA, INFINITY, THETA]


def test_family_range():
    with pytest.raises(UnsupportedN):
        construct_family(1, 4)
    with pytest.raises(UnsupportedN):
        construct_family(2, 2001)
    assert construct_family(2, 4).n == 4


def test_family_index_values():
    # closed forms of the biquadratics, independent of the root finder
    assert family_index(1, 36) == pytest.approx(math.sqrt((36 + math.sqrt(36**2 - 4 * 31)) / 2), abs=1e-12)
    assert family_index(1, 36) == pytest.approx(5.925980321315933, abs=1e-12)
    assert family_index(2, 7) == pytest.approx(math.sqrt(4 + math.sqrt(6)), abs=1e-12)
    assert family_index(2, 5) == pytest.approx(math.sqrt(3 + math.sqrt(3)), abs=1e-12)
    assert family_index(5, 36) == pytest.approx(5.866089637595537, abs=1e-10)
    assert family_index(5, 36) < (1 + math.sqrt(505)) / 4


def test_family_index_matches_eigensolver():
    for i in range(1, 6):
        for n in list(range(7, 41)) + [80, 120, 200]:
            assert index_value(construct_family(i, n)) == pytest.approx(family_index(i, n), abs=1e-8)


def test_family_index_above_sqrt_n_minus_2():
    for i in (2, 3):
        for n in range(7, 201):
            assert family_index(i, n) > math.sqrt(n - 2)


def test_difference_identities():
    for n in range(7, 61):
        p = [None] + [family_charpoly(i, n) for i in range(1, 6)]
        assert p[2] - p[1] == (X**2 + (n - 5)) * X ** (n - 6)
        assert p[3] - p[2] == 4 * (X - 1) * X ** (n - 4)
        assert p[4] - p[3] == (3 * X**2 - 4 * X - n + 5) * X ** (n - 6)


def test_switching_isomorphic_examples():
    rng = random.Random(1)
    g = construct_family(3, 9)
    theta = [rng.choice((1, -1)) for _ in range(g.n)]
    perm = list(range(g.n))
    rng.shuffle(perm)
    from signed_spectra.graph import relabel

    assert switching_isomorphic(g, relabel(switch(g, theta), perm))
    c4_pos = cycle_graph(4)
    c4_neg = cycle_graph(4, negative=[0])
    assert not switching_isomorphic(c4_pos, c4_neg)
    assert not switching_isomorphic(construct_family(2, 8), construct_family(3, 8))
    assert charpoly_exact(construct_family(2, 8)) != charpoly_exact(construct_family(3, 8))


def test_families_pairwise_distinct():
    for n in (7, 12):
        fams = [construct_family(i, n) for i in range(1, 6)]
        for a in range(5):
            for b in range(a + 1, 5):
                assert not switching_isomorphic(fams[a], fams[b])
