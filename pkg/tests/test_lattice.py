from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from kleintheta import lattice as lt


def minors_gcd_factors(m, rows, cols):
    """Invariant factors from gcds of k x k minors, independent of the SNF code."""
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        d = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                d = gcd(d, lt.det(tuple(tuple(m[i][j] for j in c) for i in r)))
        if d == 0:
            return out + [0] * (min(rows, cols) - k + 1)
        out.append(d // prev)
        prev = d
    return out


matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(rows):
    m = lt.as_matrix(rows)
    r, c = len(rows), len(rows[0])
    u, d, v = lt.smith_normal_form(m)
    assert lt.matmul(lt.matmul(u, m), v) == d
    assert abs(lt.det(u)) == 1 and abs(lt.det(v)) == 1
    diag = [d[i][i] for i in range(min(r, c))]
    assert all(d[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert diag == minors_gcd_factors(m, r, c)


@pytest.mark.parametrize("m, want", [
    (((1, 0), (0, 1)), [1, 1]),
    (((2, 1), (0, 2)), [1, 4]),
    (((0, 2), (-2, 0)), [2, 2]),
    (((2, 4), (6, 8)), [2, 4]),
])
def test_invariant_factor_examples(m, want):
    assert lt.invariant_factors(m) == want


def test_empty_matrices():
    assert lt.invariant_factors((), 0) == []
    assert lt.rank((), 3) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(
    st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_quotient_order_is_abs_det(rows):
    n = len(rows)
    d = abs(lt.det(lt.as_matrix(rows)))
    q = lt.quotient_group(rows, n)
    if d == 0:
        assert q.infinite_index and q.order is None
        return
    reps = q.representatives()
    assert q.order == d == len(reps)
    assert reps[0] == (0,) * n
    assert len({q.reduce(x) for x in reps}) == d
    # generators reduce to zero
    for g in rows:
        assert q.reduce(g) == (0,) * n


def test_quotient_examples():
    assert lt.quotient_group([(2, 0), (0, 2)], 2).divisors == (2, 2)
    assert lt.quotient_group([(1, 0), (0, 1)], 2).order == 1
    q = lt.quotient_group([(2,)], 1)
    assert q.order == 2 and q.equivalent((3,), (1,)) and not q.equivalent((0,), (1,))


@pytest.mark.parametrize("t, sign, want", [
    (((1, 1), (0, -1)), 1, [(1, 0)]),
    (((1, 1), (0, -1)), -1, [(1, -2)]),
    (((1, 0), (0, 1)), -1, []),
])
def test_eigenlattice_examples(t, sign, want):
    basis = lt.eigenlattice(t, sign)
    assert len(basis) == len(want)
    for b, w in zip(basis, want):
        assert b in (w, tuple(-x for x in w))


def test_solve_integer():
    cols = [(2, 0), (0, 3)]
    assert lt.solve_integer(cols, (4, 9)) == (2, 3)
    assert lt.solve_integer(cols, (1, 0)) is None


def test_standard_form_is_skew_and_unimodular():
    for g in range(4):
        e = lt.standard_form(g)
        assert lt.is_skew(e)
        if g:
            assert lt.det(e) == 1
