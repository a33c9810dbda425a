from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from signed_spectra.errors import NoRealRootInInterval
from signed_spectra.polynomial import (
    Polynomial,
    count_roots,
    gcd,
    largest_real_root,
    real_roots,
    root_bound,
    squarefree,
)

X = Polynomial.x()


def test_constant_first_storage_and_trim():
    p = Polynomial([2, -3, 0, 1, 0, 0])
    assert p.coeffs == (2, -3, 0, 1)
    assert p.degree == 3 and p.leading == 1
    assert Polynomial().degree == -1


def test_arithmetic():
    p = X**3 - 3 * X + 2
    assert p == (X - 1) ** 2 * (X + 2)
    assert p - p == Polynomial()
    assert -p + p == Polynomial()
    q, r = p.divmod(X - 1)
    assert q == (X - 1) * (X + 2) and not r
    assert p % (X + 2) == Polynomial()


def test_evaluation_exact_on_integers():
    p = X**4 - 36 * X**2 + 31
    assert p(0) == 31 and p(6) == 1296 - 1296 + 31
    assert p(Fraction(1, 2)) == Fraction(1, 16) - 9 + 31


def test_line_format():
    p = X * (X**4 - 6 * X**2 + 6)
    assert p.to_line() == "0 6 0 -6 0 1"
    assert Polynomial.from_line("0 6 0 -6 0 1") == p
    assert Polynomial().to_line() == "0"


def test_str():
    assert str(X**3 - 3 * X + 2) == "x^3 - 3x + 2"


def test_squarefree_and_gcd():
    p = (X - 1) ** 3 * (X + 2) ** 2 * X
    assert squarefree(p) == (X - 1) * (X + 2) * X
    assert gcd(p, p.derivative()) == ((X - 1) ** 2 * (X + 2)).monic()


def test_largest_root_examples():
    assert largest_real_root(X**2 - 2, 0, 2) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert largest_real_root(X**3 - 3 * X + 2) == pytest.approx(1.0, abs=1e-12)
    f1 = X**4 - 36 * X**2 + 31
    assert largest_real_root(f1) == pytest.approx(math.sqrt((36 + math.sqrt(36**2 - 4 * 31)) / 2), abs=1e-12)


def test_f5_root_below_closed_form_bound():
    n = 36
    f5 = X**3 - X**2 - (n - 2) * X + (n - 4)
    assert largest_real_root(f5) < (1 + math.sqrt(505)) / 4


def test_largest_root_in_window():
    p = (X - 1) * (X - 3) * (X + 5)
    assert largest_real_root(p, 0, 2) == pytest.approx(1.0)
    assert largest_real_root(p, -10, 0) == pytest.approx(-5.0)
    with pytest.raises(NoRealRootInInterval):
        largest_real_root(p, 4, 10)
    with pytest.raises(NoRealRootInInterval):
        largest_real_root(X**2 + 1)


def test_count_roots_half_open():
    p = (X - 1) * (X - 2) * (X - 3)
    assert count_roots(p, 1, 3) == 2
    assert count_roots(p, 0, 3) == 3


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
def test_integer_roots_recovered(roots):
    p = Polynomial.from_roots(roots)
    assert real_roots(p) == pytest.approx(sorted(set(roots), reverse=True), abs=1e-9)
    assert all(abs(r) <= root_bound(p) for r in roots)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_roots_agree_with_numpy(coeffs):
    p = Polynomial(coeffs)
    ours = real_roots(p)
    ref = np.roots(coeffs[::-1])
    # every root we report is a genuine root
    for r in ours:
        assert min(abs(ref - r)) < 1e-5
    assert len(ours) == len(set(ours))
