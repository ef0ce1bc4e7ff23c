from itertools import product

import pytest
from hypothesis import given, strategies as st

from kleintheta.klein import enumerate_types, standard_model
from kleintheta.theta import (QuadraticForm, apply_mod2, arf, difference, dot2, enumerate_theta,
                              is_real_theta, mod2_involution, real_theta, translate, zero_count)


def all_vectors(g):
    return list(product((0, 1), repeat=2 * g))


def forms(max_g=3):
    return st.integers(0, max_g).flatmap(
        lambda g: st.lists(st.integers(0, 1), min_size=2 * g, max_size=2 * g).map(QuadraticForm.from_bits))


@pytest.mark.parametrize("g", range(5))
def test_census(g):
    qs = list(enumerate_theta(g))
    assert len(qs) == len(set(qs)) == 4 ** g
    odd = sum(arf(q) for q in qs)
    assert odd == (2 ** (g - 1) * (2 ** g - 1) if g else 0)


@given(forms())
def test_riemann_mumford(q):
    vs = all_vectors(q.genus)
    for x in vs[:16]:
        for y in vs[:16]:
            s = tuple((a + b) % 2 for a, b in zip(x, y))
            assert q(s) == (q(x) + q(y) + dot2(x, y, q.genus)) % 2


@given(forms())
def test_arf_by_majority(q):
    g = q.genus
    zeros = zero_count(q)
    assert zeros == sum(q(x) == 0 for x in all_vectors(g))
    assert arf(q) == (0 if 2 * zeros > 4 ** g else 1)


@given(forms(2), st.data())
def test_translate_and_difference(q, data):
    eta = tuple(data.draw(st.lists(st.integers(0, 1), min_size=2 * q.genus, max_size=2 * q.genus)))
    q2 = translate(q, eta)
    for x in all_vectors(q.genus):
        assert q2(x) == (q(x) + dot2(x, eta, q.genus)) % 2
    assert difference(q2, q) == eta
    assert arf(q2) == (arf(q) + q(eta)) % 2


def test_bits_round_trip():
    q = QuadraticForm(2, (1, 0, 0, 1))
    assert q.bits() == "1,0,0,1"
    assert QuadraticForm.from_bits([1, 0, 0, 1]) == q
    with pytest.raises(ValueError):
        QuadraticForm(1, (2, 0))


@pytest.mark.parametrize("t", [t for t in enumerate_types(2) if t.n], ids=str)
def test_realness_matches_brute_force(t):
    m = standard_model(t)
    t2 = mod2_involution(m)
    for q in enumerate_theta(t.g):
        brute = all(q(apply_mod2(t2, x)) == q(x) for x in all_vectors(t.g))
        assert is_real_theta(q, m) == brute
    assert real_theta(m)
